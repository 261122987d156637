#pragma once

#include <array>
#include <cmath>

#include "hpdiv/representations.hpp"

namespace hpdiv {

using Sym3 = std::array<std::array<double, 3>, 3>;

namespace detail {

inline void require_symmetric_3x3(const Sym3& m, const char* where) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const double scale = std::max({1.0, std::abs(m[i][j]), std::abs(m[j][i])});
            if (std::abs(m[i][j] - m[j][i]) > 1e-12 * scale)
                throw input_error(std::string(where) + ": matrix is not symmetric");
        }
}

inline double frobenius_3x3(const Sym3& m) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += m[i][j] * m[i][j];
    return std::sqrt(s);
}

// Eigenvalues of a symmetric 2x2 [[a, b], [b, c]].
inline std::array<double, 2> eig2(double a, double b, double c) {
    const double tr = a + c;
    const double disc = std::sqrt(std::max(0.0, (a - c) * (a - c) + 4.0 * b * b));
    return {0.5 * (tr - disc), 0.5 * (tr + disc)};
}

inline std::array<double, 3> eig3_sym(const Sym3& m) {
    std::vector<cplx> entries(9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) entries[i * 3 + j] = m[i][j];
    const auto d = spectral_decompose(HermitianMatrix::from_entries(3, entries, 1e-9));
    return {d.eigenvalues[0], d.eigenvalues[1], d.eigenvalues[2]};
}

}  // namespace detail

// v^T M v <= 0 for all v with v^T 1 = 0, checked exactly (up to rounding)
// by projecting onto an orthonormal basis of the plane {v : v^T 1 = 0}.
inline bool is_cnd_3x3(const Sym3& m, double tol = 1e-10) {
    detail::require_symmetric_3x3(m, "is_cnd_3x3");
    // u1 = (1,-1,0)/sqrt(2), u2 = (1,1,-2)/sqrt(6)
    static constexpr double s2 = 0.70710678118654752440;
    static constexpr double s6 = 0.40824829046386301637;
    const double u1[3] = {s2, -s2, 0.0};
    const double u2[3] = {s6, s6, -2.0 * s6};
    auto quad = [&](const double* a, const double* b) {
        double s = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) s += a[i] * m[i][j] * b[j];
        return s;
    };
    const auto ev = detail::eig2(quad(u1, u1), quad(u1, u2), quad(u2, u2));
    const double slack = tol * std::max(detail::frobenius_3x3(m), 1.0);
    return ev[0] <= slack && ev[1] <= slack;
}

// M = theta 1^T + 1 theta^T - D with theta = diag(D)/2: zero diagonal,
// off-diagonal (D_ii + D_jj)/2 - D_ij.
inline Sym3 d_to_m(const Sym3& d) {
    detail::require_symmetric_3x3(d, "d_to_m");
    Sym3 m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = 0.5 * (d[i][i] + d[j][j]) - d[i][j];
    return m;
}

inline bool sqrt_triangle_3x3(const Sym3& m, double tol = 1e-10) {
    const double a = m[0][1], b = m[0][2], c = m[1][2];
    if (a < -tol || b < -tol || c < -tol) return false;
    const double ra = std::sqrt(std::max(0.0, a));
    const double rb = std::sqrt(std::max(0.0, b));
    const double rc = std::sqrt(std::max(0.0, c));
    return ra <= rb + rc + tol && rb <= ra + rc + tol && rc <= ra + rb + tol;
}

struct CndTheoremResult {
    bool psd_d;
    bool cnd_m;
    bool nonneg_m;
    bool sqrt_triangle;
    bool implications_hold;
};

// Predicates of the three-statement equivalence for squared-distance data:
// PSD D implies (cnd M and nonneg M), and the latter pair is equivalent to
// the square-root triangle inequalities on M's off-diagonals.
inline CndTheoremResult check_cnd_theorem(const Sym3& d, double tol = 1e-10) {
    detail::require_symmetric_3x3(d, "check_cnd_theorem");
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (d[i][j] < 0.0) throw input_error("check_cnd_theorem: D must be nonnegative");

    const Sym3 m = d_to_m(d);
    CndTheoremResult r;
    const auto ev = detail::eig3_sym(d);
    const double scale = std::max(detail::frobenius_3x3(d), 1.0);
    r.psd_d = ev[0] >= -tol * scale;
    r.cnd_m = is_cnd_3x3(m, tol);
    const double mtol = tol * std::max(detail::frobenius_3x3(m), 1.0);
    r.nonneg_m = m[0][1] >= -mtol && m[0][2] >= -mtol && m[1][2] >= -mtol;
    r.sqrt_triangle = sqrt_triangle_3x3(m, tol);
    const bool pair = r.cnd_m && r.nonneg_m;
    r.implications_hold = (!r.psd_d || pair) && (pair == r.sqrt_triangle);
    return r;
}

struct CmTransformResult {
    bool m_prime_psd;
    bool eta_cnd;
    bool delta_t_nonneg;

    bool all() const { return m_prime_psd && eta_cnd && delta_t_nonneg; }
};

// Pipeline for the completely-monotone transform s -> 2/s applied to the
// shifted trace-power data of a unit-trace triple: the reciprocal matrix
// [1/(t+d_ij)] must be PSD, the hollow eta-construction cnd, and each
// pairwise delta_t^2 nonnegative.
inline CmTransformResult cm_transform_check(const HermitianMatrix& x, const HermitianMatrix& y,
                                            const HermitianMatrix& z, double alpha, double t,
                                            double tol = 1e-10) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw input_error("cm_transform_check: alpha must lie in (0, 1)");
    if (!(t >= 0.0)) throw input_error("cm_transform_check: t must be >= 0");
    detail::require_unit_trace(x, "cm_transform_check");
    detail::require_unit_trace(y, "cm_transform_check");
    detail::require_unit_trace(z, "cm_transform_check");
    check_same_dim(x, y);
    check_same_dim(x, z);

    const auto tr_pow = [alpha](const HermitianMatrix& a) {
        return detail::sum_pow(pd_spectrum(a, "cm_transform_check"), alpha);
    };
    const double dx = tr_pow(x), dy = tr_pow(y), dz = tr_pow(z);
    const double dxy = tr_pow(midpoint(x, y));
    const double dxz = tr_pow(midpoint(x, z));
    const double dyz = tr_pow(midpoint(y, z));

    const Sym3 mprime = {{{1.0 / (t + dx), 1.0 / (t + dxy), 1.0 / (t + dxz)},
                          {1.0 / (t + dxy), 1.0 / (t + dy), 1.0 / (t + dyz)},
                          {1.0 / (t + dxz), 1.0 / (t + dyz), 1.0 / (t + dz)}}};

    CmTransformResult r;
    const auto ev = detail::eig3_sym(mprime);
    r.m_prime_psd = ev[0] >= -tol * std::max(detail::frobenius_3x3(mprime), 1.0);

    // eta = [1/(t+d_x), 1/(t+d_y), 1/(t+d_z)]/2; eta 1^T + 1 eta^T - M' is
    // hollow with off-diagonals delta_t^2(., .).
    const double exy = 0.5 * (1.0 / (t + dx) + 1.0 / (t + dy)) - 1.0 / (t + dxy);
    const double exz = 0.5 * (1.0 / (t + dx) + 1.0 / (t + dz)) - 1.0 / (t + dxz);
    const double eyz = 0.5 * (1.0 / (t + dy) + 1.0 / (t + dz)) - 1.0 / (t + dyz);
    const Sym3 eta = {{{0.0, exy, exz}, {exy, 0.0, eyz}, {exz, eyz, 0.0}}};
    r.eta_cnd = is_cnd_3x3(eta, tol);
    r.delta_t_nonneg = exy >= -tol && exz >= -tol && eyz >= -tol;
    return r;
}

// Hollow matrix of pairwise divergence values on a triple; cnd of this
// matrix is the bridge between squared-metric behavior and the 3x3 theorem.
inline Sym3 divergence_triple_matrix(const DivergenceSpec& spec, const HermitianMatrix& x,
                                     const HermitianMatrix& y, const HermitianMatrix& z) {
    const double dxy = spec.evaluate(x, y);
    const double dxz = spec.evaluate(x, z);
    const double dyz = spec.evaluate(y, z);
    return {{{0.0, dxy, dxz}, {dxy, 0.0, dyz}, {dxz, dyz, 0.0}}};
}

}  // namespace hpdiv
