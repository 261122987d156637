#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "hpdiv/errors.hpp"

namespace hpdiv {

using cplx = std::complex<double>;

// Dense row-major complex matrix. General (not necessarily Hermitian);
// used for eigenvector bases and intermediate products.
class ComplexMatrix {
  public:
    ComplexMatrix() : rows_(0), cols_(0) {}
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0, 0.0)) {}

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<cplx>& data() const { return data_; }

  private:
    std::size_t rows_, cols_;
    std::vector<cplx> data_;
};

inline ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = std::conj(a(i, j));
    return r;
}

inline ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw input_error("matmul: dimension mismatch");
    ComplexMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

inline double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// Hermitian carrier for points of the HPD cone. Construction enforces
// entries[i][j] = conj(entries[j][i]) up to 1e-12 * max|entry| and then
// symmetrizes exactly, so stored matrices are Hermitian to the bit.
class HermitianMatrix {
  public:
    explicit HermitianMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, cplx(0.0, 0.0)) {
        if (dim < 1) throw input_error("HermitianMatrix: dim must be >= 1");
    }

    static HermitianMatrix from_entries(std::size_t dim, const std::vector<cplx>& entries,
                                        double tol = 1e-12) {
        if (entries.size() != dim * dim)
            throw input_error("HermitianMatrix: entry count does not match dim*dim");
        double max_abs = 0.0;
        for (const auto& e : entries) {
            if (!std::isfinite(e.real()) || !std::isfinite(e.imag()))
                throw input_error("HermitianMatrix: non-finite entry");
            max_abs = std::max(max_abs, std::abs(e));
        }
        HermitianMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = i; j < dim; ++j) {
                const cplx up = entries[i * dim + j];
                const cplx lo = entries[j * dim + i];
                if (std::abs(up - std::conj(lo)) > tol * std::max(1e-300, max_abs))
                    throw input_error("HermitianMatrix: entries are not Hermitian");
                const cplx v = 0.5 * (up + std::conj(lo));
                m.a_[i * dim + j] = v;
                m.a_[j * dim + i] = std::conj(v);
            }
        for (std::size_t i = 0; i < dim; ++i) m.a_[i * dim + i] = cplx(m.a_[i * dim + i].real(), 0.0);
        return m;
    }

    static HermitianMatrix identity(std::size_t dim) {
        HermitianMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m.set(i, i, 1.0);
        return m;
    }

    static HermitianMatrix diagonal(const std::vector<double>& d) {
        HermitianMatrix m(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m.set(i, i, d[i]);
        return m;
    }

    // Symmetrizes (A + A*)/2 of an arbitrary square complex matrix.
    static HermitianMatrix hermitian_part(const ComplexMatrix& a) {
        if (a.rows() != a.cols()) throw input_error("hermitian_part: matrix not square");
        HermitianMatrix m(a.rows());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                m.a_[i * a.cols() + j] = 0.5 * (a(i, j) + std::conj(a(j, i)));
        return m;
    }

    std::size_t dim() const { return dim_; }

    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

    // Writes both (i,j) and (j,i); keeps the invariant by construction.
    void set(std::size_t i, std::size_t j, cplx v) {
        if (i == j) v = cplx(v.real(), 0.0);
        a_[i * dim_ + j] = v;
        a_[j * dim_ + i] = std::conj(v);
    }

    double trace() const {
        double t = 0.0;
        for (std::size_t i = 0; i < dim_; ++i) t += a_[i * dim_ + i].real();
        return t;
    }

    ComplexMatrix as_complex() const {
        ComplexMatrix m(dim_, dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) m(i, j) = a_[i * dim_ + j];
        return m;
    }

  private:
    std::size_t dim_;
    std::vector<cplx> a_;
};

inline void check_same_dim(const HermitianMatrix& x, const HermitianMatrix& y) {
    if (x.dim() != y.dim()) throw input_error("dimension mismatch");
}

inline HermitianMatrix operator+(const HermitianMatrix& x, const HermitianMatrix& y) {
    check_same_dim(x, y);
    HermitianMatrix r(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i)
        for (std::size_t j = i; j < x.dim(); ++j) r.set(i, j, x(i, j) + y(i, j));
    return r;
}

inline HermitianMatrix operator-(const HermitianMatrix& x, const HermitianMatrix& y) {
    check_same_dim(x, y);
    HermitianMatrix r(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i)
        for (std::size_t j = i; j < x.dim(); ++j) r.set(i, j, x(i, j) - y(i, j));
    return r;
}

inline HermitianMatrix operator*(double c, const HermitianMatrix& x) {
    HermitianMatrix r(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i)
        for (std::size_t j = i; j < x.dim(); ++j) r.set(i, j, c * x(i, j));
    return r;
}

inline HermitianMatrix midpoint(const HermitianMatrix& x, const HermitianMatrix& y) {
    return 0.5 * (x + y);
}

// tI + X
inline HermitianMatrix shift(const HermitianMatrix& x, double t) {
    HermitianMatrix r = x;
    for (std::size_t i = 0; i < x.dim(); ++i) r.set(i, i, x(i, i) + t);
    return r;
}

inline double frobenius_norm(const HermitianMatrix& x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i)
        for (std::size_t j = 0; j < x.dim(); ++j) s += std::norm(x(i, j));
    return std::sqrt(s);
}

inline double frobenius_distance(const HermitianMatrix& x, const HermitianMatrix& y) {
    return frobenius_norm(x - y);
}

// Re trace(X Y) for Hermitian X, Y; trace(XY) is real in that case.
inline double trace_product(const HermitianMatrix& x, const HermitianMatrix& y) {
    check_same_dim(x, y);
    double s = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i)
        for (std::size_t j = 0; j < x.dim(); ++j) s += (x(i, j) * y(j, i)).real();
    return s;
}

}  // namespace hpdiv
