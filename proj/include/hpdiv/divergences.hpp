#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "hpdiv/entropy.hpp"
#include "hpdiv/spectral.hpp"

namespace hpdiv {

// Scalar generators for Bregman / Jensen divergences.
enum class ScalarKind { Square, XLogX, NegLog, PowerLow, PowerHigh };

struct FunctionKind {
    ScalarKind tag = ScalarKind::Square;
    double alpha = 0.0;  // only for Power kinds

    static FunctionKind square() { return {ScalarKind::Square, 0.0}; }
    static FunctionKind xlogx() { return {ScalarKind::XLogX, 0.0}; }
    static FunctionKind neglog() { return {ScalarKind::NegLog, 0.0}; }
    static FunctionKind power_low(double a) {
        if (!(a > 0.0 && a < 1.0)) throw input_error("PowerLow: alpha must lie in (0,1)");
        return {ScalarKind::PowerLow, a};
    }
    static FunctionKind power_high(double a) {
        if (!(a > 1.0 && a < 2.0)) throw input_error("PowerHigh: alpha must lie in (1,2)");
        return {ScalarKind::PowerHigh, a};
    }

    bool convex() const { return tag != ScalarKind::PowerLow; }

    bool positive_domain() const { return tag != ScalarKind::Square; }

    double eval(double x) const {
        switch (tag) {
            case ScalarKind::Square: return 0.5 * x * x;
            case ScalarKind::XLogX: return x * std::log(x);
            case ScalarKind::NegLog: return -std::log(x);
            case ScalarKind::PowerLow:
            case ScalarKind::PowerHigh: return std::pow(x, alpha);
        }
        return 0.0;
    }

    double grad(double x) const {
        switch (tag) {
            case ScalarKind::Square: return x;
            case ScalarKind::XLogX: return std::log(x) + 1.0;
            case ScalarKind::NegLog: return -1.0 / x;
            case ScalarKind::PowerLow:
            case ScalarKind::PowerHigh: return alpha * std::pow(x, alpha - 1.0);
        }
        return 0.0;
    }

    std::string name() const {
        switch (tag) {
            case ScalarKind::Square: return "square";
            case ScalarKind::XLogX: return "xlogx";
            case ScalarKind::NegLog: return "neglog";
            case ScalarKind::PowerLow: return "power-low";
            case ScalarKind::PowerHigh: return "power-high";
        }
        return "?";
    }
};

inline FunctionKind parse_function_kind(const std::string& name, double alpha) {
    if (name == "square") return FunctionKind::square();
    if (name == "xlogx") return FunctionKind::xlogx();
    if (name == "neglog") return FunctionKind::neglog();
    if (name == "power-low") return FunctionKind::power_low(alpha);
    if (name == "power-high") return FunctionKind::power_high(alpha);
    throw input_error("unknown function kind: " + name);
}

// D_f(x, y) = f(x) - f(y) - f'(y)(x - y)
inline double bregman_scalar(const FunctionKind& f, double x, double y) {
    if (f.positive_domain() && (x <= 0.0 || y <= 0.0))
        throw domain_error("bregman_scalar: inputs must be positive for this kind");
    switch (f.tag) {
        case ScalarKind::Square: return 0.5 * (x - y) * (x - y);
        case ScalarKind::XLogX: return x * std::log(x / y) - x + y;
        case ScalarKind::NegLog: return std::log(y / x) + x / y - 1.0;
        default: return f.eval(x) - f.eval(y) - f.grad(y) * (x - y);
    }
}

// trace f(X) - trace f(Y) - <f'(Y), X - Y>
inline double bregman_matrix(const FunctionKind& f, const HermitianMatrix& x,
                             const HermitianMatrix& y) {
    check_same_dim(x, y);
    if (f.positive_domain()) {
        pd_spectrum(x, "bregman_matrix");
        pd_spectrum(y, "bregman_matrix");
    }
    const ScalarFn fval = [&f](double v) { return f.eval(v); };
    const ScalarFn fgrad = [&f](double v) { return f.grad(v); };
    const auto dy = spectral_decompose(y);
    return trace_function(x, fval) - trace_function(dy, fval) -
           trace_product(matrix_function(dy, fgrad), x - y);
}

inline double bregman_vn(const HermitianMatrix& x, const HermitianMatrix& y) {
    check_same_dim(x, y);
    const auto dx = spectral_decompose(x);
    pd_spectrum(y, "bregman_vn");
    if (dx.eigenvalues.front() <= kPdThreshold * std::max(dx.eigenvalues.back(), 0.0))
        throw domain_error("bregman_vn: first argument not positive definite");
    const ScalarFn xlogx = [](double v) { return v * std::log(v); };
    const ScalarFn logf = [](double v) { return std::log(v); };
    return trace_function(dx, xlogx) - trace_product(x, matrix_function(y, logf)) - x.trace() +
           y.trace();
}

inline double bregman_logdet(const HermitianMatrix& x, const HermitianMatrix& y) {
    check_same_dim(x, y);
    const auto lx = pd_spectrum(x, "bregman_logdet");
    const auto dy = spectral_decompose(y);
    if (dy.eigenvalues.front() <= kPdThreshold * std::max(dy.eigenvalues.back(), 0.0))
        throw domain_error("bregman_logdet: second argument not positive definite");
    const HermitianMatrix yinv = matrix_function(dy, [](double v) { return 1.0 / v; });
    return trace_product(yinv, x - y) - (logdet(lx) - logdet(dy.eigenvalues));
}

inline double bregman_frobenius(const HermitianMatrix& x, const HermitianMatrix& y) {
    const double d = frobenius_distance(x, y);
    return 0.5 * d * d;
}

// Jensen divergence of a FunctionKind, reported nonnegative for both
// orientations: "average minus midpoint" for convex kinds, flipped for
// concave ones.
inline double jensen(const FunctionKind& f, const HermitianMatrix& x, const HermitianMatrix& y) {
    check_same_dim(x, y);
    if (f.positive_domain()) {
        pd_spectrum(x, "jensen");
        pd_spectrum(y, "jensen");
    }
    const ScalarFn fval = [&f](double v) { return f.eval(v); };
    const double raw = 0.5 * (trace_function(x, fval) + trace_function(y, fval)) -
                       trace_function(midpoint(x, y), fval);
    return f.convex() ? raw : -raw;
}

// Averaged-Bregman form of the Jensen divergence; an independent route kept
// for cross-checking against the trace form.
inline double jensen_via_bregman(const FunctionKind& f, const HermitianMatrix& x,
                                 const HermitianMatrix& y) {
    const HermitianMatrix m = midpoint(x, y);
    const double raw = 0.5 * (bregman_matrix(f, x, m) + bregman_matrix(f, y, m));
    return f.convex() ? raw : -raw;
}

// delta_S^2(X,Y) = logdet((X+Y)/2) - logdet(X)/2 - logdet(Y)/2
inline double s_divergence(const HermitianMatrix& x, const HermitianMatrix& y) {
    check_same_dim(x, y);
    return logdet(midpoint(x, y)) - 0.5 * logdet(x) - 0.5 * logdet(y);
}

inline double qjsd(const HermitianMatrix& x, const HermitianMatrix& y) {
    check_same_dim(x, y);
    return entropy_von_neumann(midpoint(x, y)) -
           0.5 * (entropy_von_neumann(x) + entropy_von_neumann(y));
}

// Tsallis generalization; the trace-linear parts of S_alpha cancel in the
// Jensen difference, so only the power traces are evaluated.
inline double qjsd_alpha(const HermitianMatrix& x, const HermitianMatrix& y, double alpha) {
    check_same_dim(x, y);
    if (alpha < 0.0 || alpha > 2.0) throw input_error("qjsd_alpha: alpha must lie in [0, 2]");
    if (alpha == 1.0) return qjsd(x, y);
    const auto lx = pd_spectrum(x, "qjsd_alpha");
    const auto ly = pd_spectrum(y, "qjsd_alpha");
    const auto lm = pd_spectrum(midpoint(x, y), "qjsd_alpha");
    return (detail::sum_pow(lm, alpha) -
            0.5 * (detail::sum_pow(lx, alpha) + detail::sum_pow(ly, alpha))) /
           (1.0 - alpha);
}

inline double qjrd_alpha(const HermitianMatrix& x, const HermitianMatrix& y, double alpha) {
    check_same_dim(x, y);
    if (!(alpha > 0.0 && alpha < 1.0)) throw input_error("qjrd_alpha: alpha must lie in (0, 1)");
    return entropy_renyi(midpoint(x, y), alpha) -
           0.5 * (entropy_renyi(x, alpha) + entropy_renyi(y, alpha));
}

// S_alpha(X,Y) = (alpha tr X + (1-alpha) tr Y - tr X^alpha Y^{1-alpha})/(1-alpha)
inline double tsallis_relative(const HermitianMatrix& x, const HermitianMatrix& y, double alpha) {
    check_same_dim(x, y);
    if (!(alpha > 0.0) || alpha == 1.0)
        throw input_error("tsallis_relative: alpha must be positive and != 1");
    pd_spectrum(x, "tsallis_relative");
    pd_spectrum(y, "tsallis_relative");
    const HermitianMatrix xa = matrix_function(x, [alpha](double v) { return std::pow(v, alpha); });
    const HermitianMatrix yb =
        matrix_function(y, [alpha](double v) { return std::pow(v, 1.0 - alpha); });
    return (alpha * x.trace() + (1.0 - alpha) * y.trace() - trace_product(xa, yb)) /
           (1.0 - alpha);
}

// Delta_alpha(X,Y) = S_alpha(X,M) + S_alpha(Y,M) with M the alpha power mean.
inline double js_tsallis_relative(const HermitianMatrix& x, const HermitianMatrix& y,
                                  double alpha) {
    if (!(alpha > 0.0) || alpha == 1.0)
        throw input_error("js_tsallis_relative: alpha must be positive and != 1");
    const HermitianMatrix m = power_mean(x, y, alpha);
    return tsallis_relative(x, m, alpha) + tsallis_relative(y, m, alpha);
}

// Same quantity through the power-trace reduction:
// (alpha/(1-alpha)) (tr A^t + tr B^t - 2 tr((A+B)/2)^t), A=X^a, B=Y^a, t=1/a.
inline double js_tsallis_relative_reduced(const HermitianMatrix& x, const HermitianMatrix& y,
                                          double alpha) {
    check_same_dim(x, y);
    if (!(alpha > 0.0) || alpha == 1.0)
        throw input_error("js_tsallis_relative_reduced: alpha must be positive and != 1");
    const auto lx = pd_spectrum(x, "js_tsallis_relative_reduced");
    const auto ly = pd_spectrum(y, "js_tsallis_relative_reduced");
    const double t = 1.0 / alpha;
    const HermitianMatrix a = matrix_function(x, [alpha](double v) { return std::pow(v, alpha); });
    const HermitianMatrix b = matrix_function(y, [alpha](double v) { return std::pow(v, alpha); });
    const double tr_mid_t =
        trace_function(midpoint(a, b), [t](double v) { return std::pow(v, t); });
    return (alpha / (1.0 - alpha)) *
           (detail::sum(lx) + detail::sum(ly) - 2.0 * tr_mid_t);
}

enum class DivergenceKind {
    SDiv,
    QJSD,
    QJSDAlpha,
    QJRDAlpha,
    DeltaAlpha,
    BregmanVN,
    BregmanLogDet,
    BregmanFrobenius,
    Jensen
};

struct DivergenceSpec {
    DivergenceKind kind = DivergenceKind::SDiv;
    double alpha = 0.0;
    std::optional<FunctionKind> fkind;

    static DivergenceSpec sdiv() { return {DivergenceKind::SDiv}; }
    static DivergenceSpec qjsd() { return {DivergenceKind::QJSD}; }
    static DivergenceSpec qjsd_alpha(double a) {
        if (a < 0.0 || a > 2.0) throw input_error("QJSDAlpha: alpha must lie in [0, 2]");
        return {DivergenceKind::QJSDAlpha, a};
    }
    static DivergenceSpec qjrd_alpha(double a) {
        if (!(a > 0.0 && a < 1.0)) throw input_error("QJRDAlpha: alpha must lie in (0, 1)");
        return {DivergenceKind::QJRDAlpha, a};
    }
    static DivergenceSpec delta_alpha(double a) {
        if (!(a > 0.0) || a == 1.0) throw input_error("DeltaAlpha: alpha must be > 0, != 1");
        return {DivergenceKind::DeltaAlpha, a};
    }
    static DivergenceSpec bregman_vn() { return {DivergenceKind::BregmanVN}; }
    static DivergenceSpec bregman_logdet() { return {DivergenceKind::BregmanLogDet}; }
    static DivergenceSpec bregman_frobenius() { return {DivergenceKind::BregmanFrobenius}; }
    static DivergenceSpec jensen(FunctionKind f) {
        DivergenceSpec s{DivergenceKind::Jensen};
        s.fkind = f;
        return s;
    }

    bool symmetric() const {
        return kind != DivergenceKind::BregmanVN && kind != DivergenceKind::BregmanLogDet;
    }

    bool requires_unit_trace() const { return kind == DivergenceKind::QJRDAlpha; }

    std::string name() const {
        switch (kind) {
            case DivergenceKind::SDiv: return "sdiv";
            case DivergenceKind::QJSD: return "qjsd";
            case DivergenceKind::QJSDAlpha: return "qjsd-alpha";
            case DivergenceKind::QJRDAlpha: return "qjrd";
            case DivergenceKind::DeltaAlpha: return "delta-alpha";
            case DivergenceKind::BregmanVN: return "bregman-vn";
            case DivergenceKind::BregmanLogDet: return "bregman-logdet";
            case DivergenceKind::BregmanFrobenius: return "bregman-frob";
            case DivergenceKind::Jensen: return "jensen";
        }
        return "?";
    }

    double evaluate(const HermitianMatrix& x, const HermitianMatrix& y) const {
        switch (kind) {
            case DivergenceKind::SDiv: return s_divergence(x, y);
            case DivergenceKind::QJSD: return hpdiv::qjsd(x, y);
            case DivergenceKind::QJSDAlpha: return hpdiv::qjsd_alpha(x, y, alpha);
            case DivergenceKind::QJRDAlpha: return hpdiv::qjrd_alpha(x, y, alpha);
            case DivergenceKind::DeltaAlpha: return js_tsallis_relative(x, y, alpha);
            case DivergenceKind::BregmanVN: return hpdiv::bregman_vn(x, y);
            case DivergenceKind::BregmanLogDet: return hpdiv::bregman_logdet(x, y);
            case DivergenceKind::BregmanFrobenius: return hpdiv::bregman_frobenius(x, y);
            case DivergenceKind::Jensen:
                if (!fkind) throw input_error("Jensen spec requires a function kind");
                return hpdiv::jensen(*fkind, x, y);
        }
        throw input_error("unknown divergence kind");
    }
};

inline DivergenceSpec parse_divergence_spec(const std::string& kind, double alpha,
                                            const std::string& fkind_name) {
    if (kind == "sdiv") return DivergenceSpec::sdiv();
    if (kind == "qjsd") return DivergenceSpec::qjsd();
    if (kind == "qjsd-alpha") return DivergenceSpec::qjsd_alpha(alpha);
    if (kind == "qjrd") return DivergenceSpec::qjrd_alpha(alpha);
    if (kind == "delta-alpha") return DivergenceSpec::delta_alpha(alpha);
    if (kind == "bregman-vn") return DivergenceSpec::bregman_vn();
    if (kind == "bregman-logdet") return DivergenceSpec::bregman_logdet();
    if (kind == "bregman-frob") return DivergenceSpec::bregman_frobenius();
    if (kind == "jensen") return DivergenceSpec::jensen(parse_function_kind(fkind_name, alpha));
    throw input_error("unknown divergence kind: " + kind);
}

}  // namespace hpdiv
