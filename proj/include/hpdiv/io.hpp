#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hpdiv/matrix.hpp"
#include "hpdiv/report.hpp"

namespace hpdiv {

// Matrix file format: {"dim": n, "real": [[...]], "imag": [[...]]} with
// row-major dim x dim arrays; "imag" absent means all zeros. Readers reject
// non-Hermitian data beyond tolerance.
inline HermitianMatrix matrix_from_json(const nlohmann::json& j, double tol = 1e-12) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("real"))
        throw input_error("matrix JSON: expected object with \"dim\" and \"real\"");
    const auto dim = j.at("dim").get<std::int64_t>();
    if (dim < 1) throw input_error("matrix JSON: dim must be >= 1");
    const std::size_t n = static_cast<std::size_t>(dim);

    const auto read_grid = [n](const nlohmann::json& g, const char* name) {
        if (!g.is_array() || g.size() != n)
            throw input_error(std::string("matrix JSON: \"") + name + "\" must be a " +
                              std::to_string(n) + "x" + std::to_string(n) + " array");
        std::vector<double> out(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto& row = g.at(i);
            if (!row.is_array() || row.size() != n)
                throw input_error(std::string("matrix JSON: ragged row in \"") + name + "\"");
            for (std::size_t k = 0; k < n; ++k) out[i * n + k] = row.at(k).get<double>();
        }
        return out;
    };

    const std::vector<double> re = read_grid(j.at("real"), "real");
    std::vector<double> im(n * n, 0.0);
    if (j.contains("imag")) im = read_grid(j.at("imag"), "imag");

    std::vector<cplx> entries(n * n);
    for (std::size_t i = 0; i < n * n; ++i) entries[i] = cplx(re[i], im[i]);
    return HermitianMatrix::from_entries(n, entries, tol);
}

inline HermitianMatrix read_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open matrix file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw input_error("failed to parse " + path + ": " + e.what());
    }
    return matrix_from_json(j);
}

// Serialized by hand so that every real goes out with 17 significant digits
// and files round-trip bitwise.
inline std::string matrix_to_json_text(const HermitianMatrix& x) {
    const std::size_t n = x.dim();
    bool has_imag = false;
    for (std::size_t i = 0; i < n && !has_imag; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (x(i, j).imag() != 0.0) {
                has_imag = true;
                break;
            }

    std::ostringstream os;
    const auto grid = [&](auto part) {
        os << "[";
        for (std::size_t i = 0; i < n; ++i) {
            os << (i ? ",\n    " : "\n    ") << "[";
            for (std::size_t j = 0; j < n; ++j)
                os << (j ? ", " : "") << format_real(part(x(i, j)));
            os << "]";
        }
        os << "\n  ]";
    };
    os << "{\n  \"dim\": " << n << ",\n  \"real\": ";
    grid([](const cplx& v) { return v.real(); });
    if (has_imag) {
        os << ",\n  \"imag\": ";
        grid([](const cplx& v) { return v.imag(); });
    }
    os << "\n}\n";
    return os.str();
}

inline void write_matrix(const HermitianMatrix& x, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot open output file: " + path);
    out << matrix_to_json_text(x);
    if (!out) throw input_error("failed writing " + path);
}

}  // namespace hpdiv
