#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "hpdiv/errors.hpp"

namespace hpdiv {

struct QuadratureConfig {
    double rel_tol = 1e-8;
    double abs_tol = 1e-14;  // floor for integrals that vanish identically
    int max_subdivisions = 2000;
    double split_point = 1.0;  // where [0, inf) is split in t

    void validate() const {
        if (!(rel_tol > 0.0 && rel_tol <= 1e-2))
            throw input_error("QuadratureConfig: relTol must lie in (0, 1e-2]");
        if (!(abs_tol >= 0.0)) throw input_error("QuadratureConfig: absTol must be >= 0");
        if (max_subdivisions < 10)
            throw input_error("QuadratureConfig: maxSubdivisions must be >= 10");
        if (!(split_point > 0.0)) throw input_error("QuadratureConfig: splitPoint must be > 0");
    }
};

struct QuadratureResult {
    double value;
    double error_estimate;
};

namespace detail {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1].
inline constexpr double kGk15Nodes[8] = {
    0.000000000000000, 0.405845151377397, 0.741531185599394, 0.949107912342759,
    0.207784955007898, 0.586087235467691, 0.864864423359769, 0.991455371120813};
inline constexpr double kG7Weights[8] = {
    0.417959183673469, 0.381830050505119, 0.279705391489277, 0.129484966168870,
    0.0, 0.0, 0.0, 0.0};
inline constexpr double kK15Weights[8] = {
    0.209482141084728, 0.190350578064785, 0.140653259715525, 0.063092092629979,
    0.204432940075298, 0.169004726639267, 0.104790010322250, 0.022935322010529};

struct Segment {
    double a, b;
    double value;
    double error;
};

inline Segment gk15(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f0 = f(mid);
    double g7 = kG7Weights[0] * f0;
    double k15 = kK15Weights[0] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kGk15Nodes[i];
        const double fi = f(mid + dx) + f(mid - dx);
        g7 += kG7Weights[i] * fi;
        k15 += kK15Weights[i] * fi;
    }
    g7 *= half;
    k15 *= half;
    // The raw Kronrod-Gauss gap overestimates for smooth integrands but is
    // the safe choice near transformed endpoints.
    return {a, b, k15, std::abs(k15 - g7)};
}

// Globally adaptive bisection over (a, b]; Kronrod nodes are interior, so an
// integrable endpoint singularity at a is never sampled.
inline QuadratureResult adapt(const std::function<double(double)>& f, double a, double b,
                              const QuadratureConfig& cfg) {
    std::vector<Segment> segs;
    segs.push_back(gk15(f, a, b));
    while (true) {
        double total = 0.0, err = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            total += segs[i].value;
            err += segs[i].error;
            if (segs[i].error > segs[worst].error) worst = i;
        }
        if (err <= std::max(cfg.rel_tol * std::abs(total), cfg.abs_tol)) return {total, err};
        if (static_cast<int>(segs.size()) >= cfg.max_subdivisions)
            throw numerical_error("quad_improper: subdivision budget exhausted", total, err);
        const Segment s = segs[worst];
        const double mid = 0.5 * (s.a + s.b);
        segs[worst] = gk15(f, s.a, mid);
        segs.push_back(gk15(f, mid, s.b));
    }
}

}  // namespace detail

// Integral of `integrand` over (0, inf). An integrable t^p singularity at 0
// (p = singularity_exponent > -1) is removed by the substitution
// t = u^{1/(1+p)} on [0, split); the tail uses t = split/u, u in (0, 1].
// tail_decay_exponent r (> 1) states that the integrand falls like t^{-r};
// after inversion the tail picks up a u^{r-2} endpoint factor, which the
// same power substitution removes when r < 2.
inline QuadratureResult quad_improper(const std::function<double(double)>& integrand,
                                      const QuadratureConfig& cfg = {},
                                      double singularity_exponent = 0.0,
                                      double tail_decay_exponent = 2.0) {
    cfg.validate();
    if (!(singularity_exponent > -1.0))
        throw input_error("quad_improper: singularityExponent must be > -1");
    if (!(tail_decay_exponent > 1.0))
        throw input_error("quad_improper: tailDecayExponent must be > 1");

    const double k = 1.0 + singularity_exponent;
    const double split = cfg.split_point;
    const double u_max = std::pow(split, k);

    const auto head = [&](double u) {
        const double t = std::pow(u, 1.0 / k);
        return integrand(t) * (1.0 / k) * std::pow(u, 1.0 / k - 1.0);
    };
    const double kt = tail_decay_exponent - 1.0;  // 1 + (r - 2)
    const auto tail = [&](double v) {
        const double u = std::pow(v, 1.0 / kt);
        const double t = split / u;
        return integrand(t) * (split / (u * u)) * (1.0 / kt) * std::pow(v, 1.0 / kt - 1.0);
    };

    QuadratureConfig half = cfg;
    half.rel_tol = 0.5 * cfg.rel_tol;
    half.abs_tol = 0.5 * cfg.abs_tol;
    half.max_subdivisions = cfg.max_subdivisions / 2;
    const QuadratureResult h = detail::adapt(head, 0.0, u_max, half);
    const QuadratureResult t = detail::adapt(tail, 0.0, 1.0, half);
    return {h.value + t.value, h.error_estimate + t.error_estimate};
}

}  // namespace hpdiv
