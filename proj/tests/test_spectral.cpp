#include <catch2/catch_amalgamated.hpp>

#include "hpdiv/random.hpp"
#include "hpdiv/spectral.hpp"

using namespace hpdiv;

namespace {

HermitianMatrix sym2(double a, double b, double d) {
    HermitianMatrix m(2);
    m.set(0, 0, a);
    m.set(0, 1, b);
    m.set(1, 1, d);
    return m;
}

}  // namespace

TEST_CASE("spectral_decompose on diagonal matrices") {
    const auto d = spectral_decompose(HermitianMatrix::diagonal({3.0, 1.0}));
    REQUIRE(d.eigenvalues[0] == Catch::Approx(1.0).margin(1e-14));
    REQUIRE(d.eigenvalues[1] == Catch::Approx(3.0).margin(1e-14));
    // Eigenvectors are a permutation of identity columns.
    for (std::size_t j = 0; j < 2; ++j) {
        int ones = 0;
        for (std::size_t i = 0; i < 2; ++i)
            if (std::abs(std::abs(d.eigenvectors(i, j)) - 1.0) < 1e-12) ++ones;
        REQUIRE(ones == 1);
    }
}

TEST_CASE("spectral_decompose of [[2,1],[1,2]]") {
    // Characteristic polynomial (2-l)^2 - 1 = 0 -> l in {1, 3}.
    const auto d = spectral_decompose(sym2(2.0, 1.0, 2.0));
    REQUIRE(d.eigenvalues[0] == Catch::Approx(1.0).margin(1e-12));
    REQUIRE(d.eigenvalues[1] == Catch::Approx(3.0).margin(1e-12));
}

TEST_CASE("spectral_decompose of [[2,i],[-i,2]]") {
    HermitianMatrix m(2);
    m.set(0, 0, 2.0);
    m.set(0, 1, cplx(0.0, 1.0));
    m.set(1, 1, 2.0);
    const auto d = spectral_decompose(m);
    REQUIRE(d.eigenvalues[0] == Catch::Approx(1.0).margin(1e-12));
    REQUIRE(d.eigenvalues[1] == Catch::Approx(3.0).margin(1e-12));
}

TEST_CASE("reconstruction and unitarity residuals on random Hermitian matrices") {
    double worst_recon = 0.0, worst_unit = 0.0;
    int count = 0;
    for (std::uint64_t seed = 0; count < 1000; ++seed) {
        const int dim = 1 + static_cast<int>(seed % 8);
        Rng rng(derive_stream_seed(123, seed));
        const HermitianMatrix x = 3.0 * random_hermitian_direction(dim, rng);
        const auto d = spectral_decompose(x);

        const double recon = frobenius_distance(d.reconstruct(), x) /
                             std::max(1.0, frobenius_norm(x));
        const ComplexMatrix qtq = matmul(adjoint(d.eigenvectors), d.eigenvectors);
        ComplexMatrix res = qtq;
        for (std::size_t i = 0; i < res.rows(); ++i) res(i, i) -= 1.0;
        worst_recon = std::max(worst_recon, recon);
        worst_unit = std::max(worst_unit, frobenius_norm(res));
        for (std::size_t i = 0; i + 1 < d.eigenvalues.size(); ++i)
            REQUIRE(d.eigenvalues[i] <= d.eigenvalues[i + 1]);
        ++count;
    }
    REQUIRE(worst_recon <= 1e-10);
    REQUIRE(worst_unit <= 1e-10);
}

TEST_CASE("validate_hpd") {
    SECTION("identity") {
        const auto diag = validate_hpd(HermitianMatrix::identity(3), 1e-12);
        REQUIRE(diag.is_pd);
        REQUIRE(diag.min_eigenvalue == Catch::Approx(1.0));
    }
    SECTION("boundary of the cone") {
        const auto diag = validate_hpd(HermitianMatrix::diagonal({1.0, 0.0}), 1e-12);
        REQUIRE_FALSE(diag.is_pd);
    }
    SECTION("random HPD by construction") {
        HpdGenConfig cfg;
        cfg.dim = 4;
        cfg.seed = 7;
        REQUIRE(validate_hpd(random_hpd(cfg), 1e-12).is_pd);
    }
}

TEST_CASE("matrix_function") {
    Rng rng(99);
    const HermitianMatrix x = 2.0 * random_hermitian_direction(4, rng);

    SECTION("identity map returns the input") {
        const auto y = matrix_function(x, [](double v) { return v; });
        REQUIRE(frobenius_distance(x, y) <= 1e-12);
    }
    SECTION("log on diag(e, e^2)") {
        const auto y = matrix_function(HermitianMatrix::diagonal({std::exp(1.0), std::exp(2.0)}),
                                       [](double v) { return std::log(v); });
        REQUIRE(y(0, 0).real() == Catch::Approx(1.0).margin(1e-12));
        REQUIRE(y(1, 1).real() == Catch::Approx(2.0).margin(1e-12));
        REQUIRE(std::abs(y(0, 1)) <= 1e-13);
    }
    SECTION("sqrt of [[2,1],[1,2]] has eigenvalues 1 and sqrt(3)") {
        const auto y = matrix_function(sym2(2.0, 1.0, 2.0),
                                       [](double v) { return std::sqrt(v); });
        const auto d = spectral_decompose(y);
        REQUIRE(d.eigenvalues[0] == Catch::Approx(1.0).margin(1e-12));
        REQUIRE(d.eigenvalues[1] == Catch::Approx(std::sqrt(3.0)).margin(1e-12));
    }
    SECTION("domain error names the offending eigenvalue") {
        REQUIRE_THROWS_AS(matrix_function(HermitianMatrix::diagonal({-1.0, 2.0}),
                                          [](double v) { return std::log(v); }),
                          domain_error);
    }
}

TEST_CASE("trace_function") {
    const ScalarFn xlogx = [](double v) { return v * std::log(v); };
    REQUIRE(trace_function(HermitianMatrix::identity(3), xlogx) ==
            Catch::Approx(0.0).margin(1e-15));
    REQUIRE(trace_function(HermitianMatrix::diagonal({4.0, 1.0}),
                           [](double v) { return std::sqrt(v); }) == Catch::Approx(3.0));
    REQUIRE(trace_function(HermitianMatrix::diagonal({2.0, 3.0}),
                           [](double v) { return -std::log(v); }) ==
            Catch::Approx(-std::log(6.0)));
}

TEST_CASE("spectral mapping consistency: trace of matrix function") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Rng rng(derive_stream_seed(5, seed));
        const int dim = 2 + static_cast<int>(seed % 5);
        HpdGenConfig cfg;
        cfg.dim = dim;
        cfg.seed = derive_stream_seed(6, seed);
        const HermitianMatrix x = random_hpd(cfg);
        const ScalarFn g = [](double v) { return std::pow(v, 0.7); };
        const double via_trace = trace_function(x, g);
        const double via_matrix = matrix_function(x, g).trace();
        REQUIRE(via_trace == Catch::Approx(via_matrix).epsilon(1e-10));
    }
}

TEST_CASE("non-Hermitian input is rejected") {
    std::vector<cplx> e = {cplx(1, 0), cplx(2, 0), cplx(3, 0), cplx(4, 0)};
    REQUIRE_THROWS_AS(HermitianMatrix::from_entries(2, e), input_error);
}
