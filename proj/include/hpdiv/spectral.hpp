#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <vector>

#include "hpdiv/matrix.hpp"

namespace hpdiv {

struct SpectralDecomposition {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // unitary, columns

    HermitianMatrix reconstruct() const {
        const std::size_t n = eigenvalues.size();
        ComplexMatrix qd(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) qd(i, j) = eigenvectors(i, j) * eigenvalues[j];
        return HermitianMatrix::hermitian_part(matmul(qd, adjoint(eigenvectors)));
    }
};

namespace detail {

inline double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace detail

// Cyclic Jacobi for complex Hermitian matrices. Each rotation phases the
// pivot entry to a real value and applies the classical symmetric Schur
// rotation; sweeps stop once the off-diagonal Frobenius norm drops below
// 1e-14 * ||X||_F (cap: 100 sweeps).
inline SpectralDecomposition spectral_decompose(const HermitianMatrix& x) {
    const std::size_t n = x.dim();
    ComplexMatrix a = x.as_complex();
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double norm_x = frobenius_norm(x);
    const double threshold = 1e-14 * std::max(norm_x, 1e-300);
    const int max_sweeps = 100;

    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        if (detail::off_diagonal_norm(a) <= threshold) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double abs_apq = std::abs(a(p, q));
                if (abs_apq <= threshold / static_cast<double>(n)) continue;

                const cplx phase = a(p, q) / abs_apq;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * abs_apq);
                const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                              : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // Column update: A <- A J with J(p,p)=c, J(q,p)=-s conj(phase),
                //                J(p,q)=s, J(q,q)=c conj(phase); then rows by symmetry.
                const cplx sp = s * std::conj(phase);
                const cplx cp = c * std::conj(phase);
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - sp * akq;
                    a(k, q) = s * akp + cp * akq;
                    const cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - sp * vkq;
                    v(k, q) = s * vkp + cp * vkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    a(p, k) = std::conj(a(k, p));
                    a(q, k) = std::conj(a(k, q));
                }
                // Recompute the rotated 2x2 block exactly.
                a(p, p) = c * c * app + s * s * aqq - 2.0 * c * s * abs_apq;
                a(q, q) = s * s * app + c * c * aqq + 2.0 * c * s * abs_apq;
                a(p, q) = cplx(0.0, 0.0);
                a(q, p) = cplx(0.0, 0.0);
            }
        }
    }

    const double residual = detail::off_diagonal_norm(a);
    if (residual > threshold && residual > 1e-12 * std::max(norm_x, 1.0)) {
        std::ostringstream msg;
        msg << "spectral_decompose: no convergence after " << sweep
            << " sweeps, off-diagonal residual " << residual;
        throw numerical_error(msg.str(), a(0, 0).real(), residual);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    SpectralDecomposition d;
    d.eigenvalues.resize(n);
    d.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        d.eigenvalues[j] = a(order[j], order[j]).real();
        for (std::size_t i = 0; i < n; ++i) d.eigenvectors(i, j) = v(i, order[j]);
    }
    return d;
}

struct HpdDiagnostics {
    bool is_hermitian;
    double min_eigenvalue;
    double max_eigenvalue;
    bool is_pd;
};

inline HpdDiagnostics validate_hpd(const HermitianMatrix& x, double tol = 1e-12) {
    const auto d = spectral_decompose(x);
    HpdDiagnostics r;
    r.is_hermitian = true;  // by construction of HermitianMatrix
    r.min_eigenvalue = d.eigenvalues.front();
    r.max_eigenvalue = d.eigenvalues.back();
    r.is_pd = r.min_eigenvalue > tol * std::max(r.max_eigenvalue, 0.0);
    return r;
}

using ScalarFn = std::function<double(double)>;

namespace detail {

inline void check_on_spectrum(const ScalarFn& g, const std::vector<double>& eigenvalues,
                              const char* where) {
    for (double lam : eigenvalues) {
        const double y = g(lam);
        if (!std::isfinite(y)) {
            std::ostringstream msg;
            msg << where << ": scalar function undefined at eigenvalue " << lam;
            throw domain_error(msg.str());
        }
    }
}

}  // namespace detail

inline HermitianMatrix matrix_function(const SpectralDecomposition& d, const ScalarFn& g) {
    detail::check_on_spectrum(g, d.eigenvalues, "matrix_function");
    const std::size_t n = d.eigenvalues.size();
    ComplexMatrix qd(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) qd(i, j) = d.eigenvectors(i, j) * g(d.eigenvalues[j]);
    return HermitianMatrix::hermitian_part(matmul(qd, adjoint(d.eigenvectors)));
}

inline HermitianMatrix matrix_function(const HermitianMatrix& x, const ScalarFn& g) {
    return matrix_function(spectral_decompose(x), g);
}

inline double trace_function(const SpectralDecomposition& d, const ScalarFn& g) {
    detail::check_on_spectrum(g, d.eigenvalues, "trace_function");
    double s = 0.0;
    for (double lam : d.eigenvalues) s += g(lam);
    return s;
}

inline double trace_function(const HermitianMatrix& x, const ScalarFn& g) {
    return trace_function(spectral_decompose(x), g);
}

// Divergence computations reject eigenvalues at or below this multiple of
// the largest one; log/power kernels degrade quickly past it.
inline constexpr double kPdThreshold = 1e-12;

inline std::vector<double> pd_spectrum(const HermitianMatrix& x, const char* where) {
    const auto d = spectral_decompose(x);
    if (d.eigenvalues.front() <= kPdThreshold * std::max(d.eigenvalues.back(), 0.0)) {
        std::ostringstream msg;
        msg << where << ": matrix is not positive definite (min eigenvalue "
            << d.eigenvalues.front() << ")";
        throw domain_error(msg.str());
    }
    return d.eigenvalues;
}

}  // namespace hpdiv
