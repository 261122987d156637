#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "hpdiv/divergences.hpp"
#include "hpdiv/quadrature.hpp"

namespace hpdiv {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

namespace detail {

// (log1p(z) - z)/z^2 without cancellation; tends to -1/2 as z -> 0. The
// divided form stays finite where z^2 would underflow.
inline double log1p_minus_q(double z) {
    if (std::abs(z) >= 0.25) return (std::log1p(z) - z) / (z * z);
    double term = -1.0;  // signed (-1)^{k+1} z^{k-2} at k = 2
    double sum = 0.5 * term;
    for (int k = 3; k <= 40; ++k) {
        term *= -z;
        const double add = term / k;
        sum += add;
        if (std::abs(add) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

// log1p(z) - z without cancellation.
inline double log1p_minus(double z) { return z * z * log1p_minus_q(z); }

}  // namespace detail

// Point mass of a representing measure.
struct Atom {
    double t;       // location, > 0
    double weight;  // >= 0
};

// Integral-representation data shared by the concave-log-kernel form
// (kernel log((t+x)/(1+t))) and the convex form (kernel t x - log(1+t x)).
// The measure is atoms plus an absolutely continuous density w(t).
struct Representation {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;  // weight of the log x (resp. -log x) term, >= 0
    std::vector<Atom> atoms;
    std::function<double(double)> density;  // null when purely atomic
    double singularity_exponent = 0.0;      // t-exponent of density as t -> 0+
    double density_tail_exponent = 0.0;     // t-exponent of density as t -> inf

    void validate() const {
        if (c < 0.0) throw input_error("Representation: c must be >= 0");
        for (const auto& atom : atoms) {
            if (!(atom.t > 0.0)) throw input_error("Representation: atom location must be > 0");
            if (atom.weight < 0.0) throw input_error("Representation: atom weight must be >= 0");
        }
    }
};

// x^alpha = (alpha sin(alpha pi)/pi) int_0^inf log((t+x)/t) t^{alpha-1} dt
inline Representation power_low_representation(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw input_error("power_low_representation: alpha must lie in (0, 1)");
    Representation rep;
    const double scale = alpha * std::sin(alpha * kPi) / kPi;
    rep.density = [alpha, scale](double t) { return scale * std::pow(t, alpha - 1.0); };
    rep.singularity_exponent = alpha - 1.0;
    rep.density_tail_exponent = alpha - 1.0;
    return rep;
}

// x^alpha = (|alpha sin(alpha pi)|/pi) int_0^inf (t x - log(1+t x)) t^{-alpha-1} dt
inline Representation power_high_representation(double alpha) {
    if (!(alpha > 1.0 && alpha < 2.0))
        throw input_error("power_high_representation: alpha must lie in (1, 2)");
    Representation rep;
    const double scale = std::abs(alpha * std::sin(alpha * kPi)) / kPi;
    rep.density = [alpha, scale](double t) { return scale * std::pow(t, -alpha - 1.0); };
    // Kernel behaves like t^2 x^2/2 near 0, so the product scales as t^{1-alpha}.
    rep.singularity_exponent = 1.0 - alpha;
    rep.density_tail_exponent = -alpha - 1.0;
    return rep;
}

inline double power_rep_low(double x, double alpha, const QuadratureConfig& cfg = {}) {
    if (!(x > 0.0)) throw domain_error("power_rep_low: x must be > 0");
    const Representation rep = power_low_representation(alpha);
    // Kernel ~ x/t at infinity, so the integrand decays like t^{alpha - 2}.
    const auto integrand = [&](double t) { return rep.density(t) * std::log1p(x / t); };
    return quad_improper(integrand, cfg, rep.singularity_exponent, 2.0 - alpha).value;
}

inline double power_rep_high(double x, double alpha, const QuadratureConfig& cfg = {}) {
    if (!(x > 0.0)) throw domain_error("power_rep_high: x must be > 0");
    if (!(alpha > 1.0 && alpha < 2.0))
        throw input_error("power_rep_high: alpha must lie in (1, 2)");
    // t^{-alpha-1} (t x - log1p(t x)) written as t^{1-alpha} x^2 q(t x) so
    // that neither factor overflows for tiny t; decays like t^{-alpha}.
    const double scale = std::abs(alpha * std::sin(alpha * kPi)) / kPi;
    const auto integrand = [&](double t) {
        return -scale * std::pow(t, 1.0 - alpha) * x * x * detail::log1p_minus_q(t * x);
    };
    return quad_improper(integrand, cfg, 1.0 - alpha, alpha).value;
}

// log x = -int_0^inf (1/(t+x) - t/(1+t^2)) dt
inline double log_rep(double x, const QuadratureConfig& cfg = {}) {
    if (!(x > 0.0)) throw domain_error("log_rep: x must be > 0");
    const auto integrand = [x](double t) { return -(1.0 / (t + x) - t / (1.0 + t * t)); };
    return quad_improper(integrand, cfg, 0.0).value;
}

// Jensen divergence of a represented concave f, evaluated through the
// S-divergence decomposition:
//   Delta_f(X,Y) = c delta_S^2(X,Y) + sum_j w_j delta_S^2(t_j I+X, t_j I+Y)
//                + int w(t) delta_S^2(tI+X, tI+Y) dt.
// The affine a, b terms cancel in every Jensen difference.
inline double delta_f_via_sdiv(const HermitianMatrix& x, const HermitianMatrix& y,
                               const Representation& rep, const QuadratureConfig& cfg = {}) {
    check_same_dim(x, y);
    rep.validate();
    // The shifted S-divergence only needs the three spectra; for t far above
    // the spectrum the direct log sum cancels to O(1/t^2), so switch to
    // log1p(mu/t) - mu/t terms whose linear parts cancel exactly.
    const std::vector<double> mu = pd_spectrum(midpoint(x, y), "delta_f_via_sdiv");
    const std::vector<double> lam = pd_spectrum(x, "delta_f_via_sdiv");
    const std::vector<double> nu = pd_spectrum(y, "delta_f_via_sdiv");
    const double lmax = std::max({mu.back(), lam.back(), nu.back()});
    const auto gap = [&](double t) {
        double s = 0.0;
        if (t <= 10.0 * lmax) {
            for (double v : mu) s += std::log(t + v);
            for (double v : lam) s -= 0.5 * std::log(t + v);
            for (double v : nu) s -= 0.5 * std::log(t + v);
        } else {
            for (double v : mu) s += detail::log1p_minus(v / t);
            for (double v : lam) s -= 0.5 * detail::log1p_minus(v / t);
            for (double v : nu) s -= 0.5 * detail::log1p_minus(v / t);
        }
        return s;
    };

    double value = 0.0;
    if (rep.c > 0.0) value += rep.c * gap(0.0);
    for (const auto& atom : rep.atoms) value += atom.weight * gap(atom.t);
    if (rep.density) {
        const auto integrand = [&](double t) { return rep.density(t) * gap(t); };
        value += quad_improper(integrand, cfg, rep.singularity_exponent,
                               2.0 - rep.density_tail_exponent)
                     .value;
    }
    return value;
}

// Convex-kernel counterpart: the t x part cancels in the Jensen difference,
// leaving logdet(I + t (X+Y)/2) - logdet(I + tX)/2 - logdet(I + tY)/2 under
// the measure; the -c log x term contributes +c delta_S^2.
inline double delta_f_via_convex_kernel(const HermitianMatrix& x, const HermitianMatrix& y,
                                        const Representation& rep,
                                        const QuadratureConfig& cfg = {}) {
    check_same_dim(x, y);
    rep.validate();
    // logdet(I + tM) = sum log1p(t mu_i). For small t the three log sums
    // cancel to O(t^2); the log1p(z) - z form drops the linear parts, which
    // cancel exactly because trace((X+Y)/2) = (trace X + trace Y)/2.
    const std::vector<double> mu = pd_spectrum(midpoint(x, y), "delta_f_via_convex_kernel");
    const std::vector<double> lam = pd_spectrum(x, "delta_f_via_convex_kernel");
    const std::vector<double> nu = pd_spectrum(y, "delta_f_via_convex_kernel");
    const double lmax = std::max({mu.back(), lam.back(), nu.back()});
    const auto gap = [&](double t) {
        double s = 0.0;
        if (t * lmax <= 0.1) {
            for (double v : mu) s += detail::log1p_minus(t * v);
            for (double v : lam) s -= 0.5 * detail::log1p_minus(t * v);
            for (double v : nu) s -= 0.5 * detail::log1p_minus(t * v);
        } else {
            for (double v : mu) s += std::log1p(t * v);
            for (double v : lam) s -= 0.5 * std::log1p(t * v);
            for (double v : nu) s -= 0.5 * std::log1p(t * v);
        }
        return s;
    };
    double value = 0.0;
    if (rep.c > 0.0) value += rep.c * s_divergence(x, y);
    for (const auto& atom : rep.atoms) value += atom.weight * gap(atom.t);
    if (rep.density) {
        const auto integrand = [&](double t) { return rep.density(t) * gap(t); };
        // gap(t) tends to the plain S-divergence, so the tail decays with
        // the density alone.
        value += quad_improper(integrand, cfg, rep.singularity_exponent,
                               -rep.density_tail_exponent)
                     .value;
    }
    return value;
}

// Traces of alpha-th powers of X, Y and their midpoint.
struct RenyiTraceData {
    double d_x;
    double d_y;
    double d_xy;

    static RenyiTraceData from_pair(const HermitianMatrix& x, const HermitianMatrix& y,
                                    double alpha) {
        check_same_dim(x, y);
        RenyiTraceData d;
        d.d_x = detail::sum_pow(pd_spectrum(x, "RenyiTraceData"), alpha);
        d.d_y = detail::sum_pow(pd_spectrum(y, "RenyiTraceData"), alpha);
        d.d_xy = detail::sum_pow(pd_spectrum(midpoint(x, y), "RenyiTraceData"), alpha);
        return d;
    }
};

// delta_t^2 = (1/(t+d_x) + 1/(t+d_y))/2 - 1/(t+d_xy)
inline double renyi_delta_t(const RenyiTraceData& d, double t) {
    if (!(t >= 0.0)) throw input_error("renyi_delta_t: t must be >= 0");
    // Common-denominator form: the naive difference of ~1/t terms cancels to
    // O(1/t^2) and loses accuracy for large t.
    const double num = t * (2.0 * d.d_xy - d.d_x - d.d_y) + d.d_xy * (d.d_x + d.d_y) -
                       2.0 * d.d_x * d.d_y;
    return 0.5 * num / ((t + d.d_x) * (t + d.d_y) * (t + d.d_xy));
}

// Antiderivative route: int_0^inf delta_t^2 dt = log d_xy - (log d_x + log d_y)/2.
inline double renyi_integral_closed_form(const RenyiTraceData& d) {
    return std::log(d.d_xy) - 0.5 * (std::log(d.d_x) + std::log(d.d_y));
}

namespace detail {

inline void require_unit_trace(const HermitianMatrix& x, const char* where) {
    if (std::abs(x.trace() - 1.0) > 1e-8)
        throw domain_error(std::string(where) + ": input must have unit trace");
}

}  // namespace detail

struct QjrdIntegralResult {
    double raw_integral;  // int_0^inf delta_t^2 dt
    double value;         // raw_integral / (1 - alpha), matches qjrd_alpha
};

inline QjrdIntegralResult qjrd_via_integral(const HermitianMatrix& x, const HermitianMatrix& y,
                                            double alpha, const QuadratureConfig& cfg = {}) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw input_error("qjrd_via_integral: alpha must lie in (0, 1)");
    detail::require_unit_trace(x, "qjrd_via_integral");
    detail::require_unit_trace(y, "qjrd_via_integral");
    const RenyiTraceData d = RenyiTraceData::from_pair(x, y, alpha);
    const auto integrand = [&](double t) { return renyi_delta_t(d, t); };
    const double raw = quad_improper(integrand, cfg, 0.0).value;
    return {raw, raw / (1.0 - alpha)};
}

}  // namespace hpdiv
