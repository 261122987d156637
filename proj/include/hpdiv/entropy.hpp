#pragma once

#include <cmath>

#include "hpdiv/spectral.hpp"

namespace hpdiv {

namespace detail {

inline double sum_pow(const std::vector<double>& lambda, double alpha) {
    double s = 0.0;
    for (double l : lambda) s += std::pow(l, alpha);
    return s;
}

inline double sum(const std::vector<double>& lambda) {
    double s = 0.0;
    for (double l : lambda) s += l;
    return s;
}

}  // namespace detail

// S(X) = -trace(X log X)
inline double entropy_von_neumann(const std::vector<double>& spectrum) {
    double s = 0.0;
    for (double l : spectrum) s -= l * std::log(l);
    return s;
}

inline double entropy_von_neumann(const HermitianMatrix& x) {
    return entropy_von_neumann(pd_spectrum(x, "entropy_von_neumann"));
}

// S_alpha(X) = (trace X^alpha - trace X)/(1 - alpha), alpha in [0,2];
// alpha = 1 is the von Neumann limit.
inline double entropy_tsallis(const std::vector<double>& spectrum, double alpha) {
    if (alpha < 0.0 || alpha > 2.0)
        throw input_error("entropy_tsallis: alpha must lie in [0, 2]");
    if (alpha == 1.0) return entropy_von_neumann(spectrum);
    return (detail::sum_pow(spectrum, alpha) - detail::sum(spectrum)) / (1.0 - alpha);
}

inline double entropy_tsallis(const HermitianMatrix& x, double alpha) {
    return entropy_tsallis(pd_spectrum(x, "entropy_tsallis"), alpha);
}

// H_alpha(X) = log(trace X^alpha / trace X) / (1 - alpha), alpha >= 0, != 1.
inline double entropy_renyi(const std::vector<double>& spectrum, double alpha) {
    if (alpha < 0.0) throw input_error("entropy_renyi: alpha must be >= 0");
    if (alpha == 1.0) throw input_error("entropy_renyi: alpha = 1 not supported");
    return std::log(detail::sum_pow(spectrum, alpha) / detail::sum(spectrum)) / (1.0 - alpha);
}

inline double entropy_renyi(const HermitianMatrix& x, double alpha) {
    return entropy_renyi(pd_spectrum(x, "entropy_renyi"), alpha);
}

inline double logdet(const std::vector<double>& spectrum) {
    double s = 0.0;
    for (double l : spectrum) s += std::log(l);
    return s;
}

inline double logdet(const HermitianMatrix& x) { return logdet(pd_spectrum(x, "logdet")); }

// ((X^alpha + Y^alpha)/2)^{1/alpha}, alpha > 0.
inline HermitianMatrix power_mean(const HermitianMatrix& x, const HermitianMatrix& y,
                                  double alpha) {
    check_same_dim(x, y);
    if (!(alpha > 0.0)) throw input_error("power_mean: alpha must be > 0");
    pd_spectrum(x, "power_mean");
    pd_spectrum(y, "power_mean");
    const auto pow_a = [alpha](double v) { return std::pow(v, alpha); };
    const HermitianMatrix mid = midpoint(matrix_function(x, pow_a), matrix_function(y, pow_a));
    return matrix_function(mid, [alpha](double v) { return std::pow(v, 1.0 / alpha); });
}

}  // namespace hpdiv
