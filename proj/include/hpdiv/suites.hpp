#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "hpdiv/cnd.hpp"
#include "hpdiv/random.hpp"
#include "hpdiv/report.hpp"

namespace hpdiv {

struct SuiteConfig {
    std::vector<int> dims{2, 3, 4, 5, 6};
    int trials = 1000;
    std::uint64_t seed = 42;
    double slack_tol = 1e-9;
    int threads = 0;  // 0 = hardware concurrency
};

namespace detail {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

// Per-trial seeds are derived, and records land at their trial index, so the
// report is identical for any thread count.
template <class Fn>
void run_trials(int trials, int threads, std::vector<TrialRecord>& records, Fn&& body) {
    records.resize(trials);
    threads = std::min(resolve_threads(threads), std::max(trials, 1));
    if (threads <= 1) {
        for (int i = 0; i < trials; ++i) records[i] = body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
            while (true) {
                const int i = next.fetch_add(1);
                if (i >= trials) break;
                records[i] = body(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

inline HermitianMatrix draw(std::uint64_t stream, int salt, int dim, bool unit_trace) {
    HpdGenConfig gen;
    gen.dim = static_cast<std::size_t>(dim);
    gen.seed = splitmix64(stream + static_cast<std::uint64_t>(salt) * 0x9e3779b9ULL);
    gen.log_eig_min = -1.5;
    gen.log_eig_max = 1.5;
    gen.unit_trace = unit_trace;
    return random_hpd(gen);
}

inline double sqrt_clamped(double v) { return std::sqrt(std::max(v, 0.0)); }

}  // namespace detail

// Triangle inequality on sqrt(divergence) over random triples. All three
// labelings are checked; a trial passes iff every labeling has
// d(a,c) <= d(a,b) + d(b,c) + slackTol (1 + d(a,c)).
inline VerificationReport triangle_suite(const DivergenceSpec& spec, const SuiteConfig& cfg) {
    VerificationReport rep;
    rep.suite = "triangle";
    rep.spec_name = spec.name();
    rep.spec_alpha = spec.alpha;
    rep.trials = cfg.trials;
    rep.dims = cfg.dims;
    rep.seed = cfg.seed;
    rep.unit_trace = spec.requires_unit_trace();

    detail::run_trials(cfg.trials, cfg.threads, rep.records, [&](int trial) {
        TrialRecord r;
        r.trial = trial;
        r.dim = cfg.dims[static_cast<std::size_t>(trial) % cfg.dims.size()];
        const std::uint64_t stream = derive_stream_seed(cfg.seed, trial);
        try {
            const HermitianMatrix x = detail::draw(stream, 0, r.dim, rep.unit_trace);
            const HermitianMatrix y = detail::draw(stream, 1, r.dim, rep.unit_trace);
            const HermitianMatrix z = detail::draw(stream, 2, r.dim, rep.unit_trace);
            const double dxy = detail::sqrt_clamped(spec.evaluate(x, y));
            const double dyz = detail::sqrt_clamped(spec.evaluate(y, z));
            const double dxz = detail::sqrt_clamped(spec.evaluate(x, z));
            r.d_xy = dxy;
            r.d_yz = dyz;
            r.d_xz = dxz;
            r.slack = dxy + dyz - dxz;
            r.pass = true;
            const double sides[3][3] = {
                {dxy, dyz, dxz}, {dxy, dxz, dyz}, {dyz, dxz, dxy}};
            for (const auto& s : sides) {
                const double slack = s[0] + s[1] - s[2];
                if (slack < r.slack) r.slack = slack;
                if (slack < -cfg.slack_tol * (1.0 + s[2])) r.pass = false;
            }
        } catch (const std::exception& e) {
            r.error = e.what();
            r.pass = false;
            r.slack = 0.0;
        }
        return r;
    });
    rep.finalize();
    return rep;
}

// Remaining metric axioms on random pairs: nonnegativity, symmetry (or,
// for Bregman kinds, presence of asymmetry, which is expected and does not
// fail the trial), and identity of indiscernibles.
inline VerificationReport axioms_suite(const DivergenceSpec& spec, const SuiteConfig& cfg) {
    VerificationReport rep;
    rep.suite = "axioms";
    rep.spec_name = spec.name();
    rep.spec_alpha = spec.alpha;
    rep.trials = cfg.trials;
    rep.dims = cfg.dims;
    rep.seed = cfg.seed;
    rep.unit_trace = spec.requires_unit_trace();

    const bool checks_identity =
        spec.kind == DivergenceKind::SDiv || spec.kind == DivergenceKind::QJSD ||
        (spec.kind == DivergenceKind::QJSDAlpha && spec.alpha > 0.0) ||
        spec.kind == DivergenceKind::QJRDAlpha || spec.kind == DivergenceKind::DeltaAlpha;

    detail::run_trials(cfg.trials, cfg.threads, rep.records, [&](int trial) {
        TrialRecord r;
        r.trial = trial;
        r.dim = cfg.dims[static_cast<std::size_t>(trial) % cfg.dims.size()];
        const std::uint64_t stream = derive_stream_seed(cfg.seed, trial);
        try {
            const HermitianMatrix x = detail::draw(stream, 0, r.dim, rep.unit_trace);
            const HermitianMatrix y = detail::draw(stream, 1, r.dim, rep.unit_trace);
            const double dxy = spec.evaluate(x, y);
            const double dyx = spec.evaluate(y, x);
            const double dxx = spec.evaluate(x, x);
            r.d_xy = dxy;
            r.d_yz = dyx;
            r.d_xz = dxx;
            r.pass = true;
            r.slack = dxy + 1e-10 * (1.0 + std::abs(dxy));  // nonnegativity margin
            if (dxy < -1e-10 * (1.0 + std::abs(dxy))) r.pass = false;
            if (spec.symmetric()) {
                const double asym = std::abs(dxy - dyx);
                if (asym > 1e-12 * (1.0 + std::abs(dxy))) r.pass = false;
                r.slack = std::min(r.slack, 1e-12 * (1.0 + std::abs(dxy)) - asym);
            }
            if (std::abs(dxx) > 1e-10) r.pass = false;
            if (checks_identity &&
                frobenius_distance(x, y) > 1e-3 * frobenius_norm(x) && !(dxy > 1e-8))
                r.pass = false;
        } catch (const std::exception& e) {
            r.error = e.what();
            r.pass = false;
            r.slack = 0.0;
        }
        return r;
    });
    rep.finalize();
    return rep;
}

struct LimitRecord {
    double eps;
    double qjsd_plus;   // qjsd_alpha at 1 + eps
    double qjsd_minus;  // qjsd_alpha at 1 - eps
    double difference;  // max deviation from qjsd
    bool pass;
};

struct LimitReport {
    double qjsd_value = 0.0;
    std::vector<LimitRecord> records;
    bool all_pass = true;
};

// |QJSD_{1 +/- eps} - QJSD| <= 10 eps (1 + QJSD) for eps <= 1e-3.
inline LimitReport limit_suite(const HermitianMatrix& x, const HermitianMatrix& y,
                               const std::vector<double>& eps_list) {
    LimitReport rep;
    rep.qjsd_value = qjsd(x, y);
    for (double eps : eps_list) {
        LimitRecord r;
        r.eps = eps;
        r.qjsd_plus = qjsd_alpha(x, y, 1.0 + eps);
        r.qjsd_minus = qjsd_alpha(x, y, 1.0 - eps);
        r.difference = std::max(std::abs(r.qjsd_plus - rep.qjsd_value),
                                std::abs(r.qjsd_minus - rep.qjsd_value));
        r.pass = eps > 1e-3 || r.difference <= 10.0 * eps * (1.0 + rep.qjsd_value);
        if (!r.pass) rep.all_pass = false;
        rep.records.push_back(r);
    }
    return rep;
}

// Scalar integral-representation accuracy over a log grid. rep is one of
// power-low, power-high, log; record fields: d_xy = x, d_yz = exact,
// d_xz = quadrature value, slack = tol - relative error.
inline VerificationReport integral_suite(const std::string& rep, double alpha, double tol,
                                         int points = 20) {
    if (!(tol > 0.0)) throw input_error("integral_suite: tol must be > 0");
    if (points < 2) throw input_error("integral_suite: need at least 2 grid points");
    VerificationReport out;
    out.suite = "integral";
    out.spec_name = rep;
    out.spec_alpha = alpha;
    out.trials = points;
    out.dims = {1};

    for (int i = 0; i < points; ++i) {
        TrialRecord r;
        r.trial = i;
        r.dim = 1;
        const double x = std::pow(10.0, -2.0 + 4.0 * i / (points - 1));
        r.d_xy = x;
        try {
            if (rep == "power-low") {
                r.d_yz = std::pow(x, alpha);
                r.d_xz = power_rep_low(x, alpha);
            } else if (rep == "power-high") {
                r.d_yz = std::pow(x, alpha);
                r.d_xz = power_rep_high(x, alpha);
            } else if (rep == "log") {
                r.d_yz = std::log(x);
                r.d_xz = log_rep(x);
            } else {
                throw input_error("integral_suite: unknown representation " + rep);
            }
            const double rel = std::abs(r.d_xz - r.d_yz) / std::max(std::abs(r.d_yz), 1e-3);
            r.slack = tol - rel;
            r.pass = rel <= tol;
        } catch (const input_error&) {
            throw;
        } catch (const std::exception& e) {
            r.error = e.what();
            r.pass = false;
        }
        out.records.push_back(r);
    }
    out.finalize();
    return out;
}

// QJSD_alpha -> QJSD continuity at alpha = 1 over random pairs; eps = 1e-4,
// pass iff the deviation is within 10 eps (1 + QJSD).
inline VerificationReport limit_pairs_suite(const SuiteConfig& cfg, double eps = 1e-4) {
    VerificationReport rep;
    rep.suite = "limit";
    rep.spec_name = "qjsd-alpha";
    rep.spec_alpha = 1.0;
    rep.trials = cfg.trials;
    rep.dims = cfg.dims;
    rep.seed = cfg.seed;

    detail::run_trials(cfg.trials, cfg.threads, rep.records, [&](int trial) {
        TrialRecord r;
        r.trial = trial;
        r.dim = cfg.dims[static_cast<std::size_t>(trial) % cfg.dims.size()];
        const std::uint64_t stream = derive_stream_seed(cfg.seed, trial);
        try {
            const HermitianMatrix x = detail::draw(stream, 0, r.dim, false);
            const HermitianMatrix y = detail::draw(stream, 1, r.dim, false);
            const auto lim = limit_suite(x, y, {eps});
            r.d_xy = lim.qjsd_value;
            r.d_yz = lim.records[0].qjsd_plus;
            r.d_xz = lim.records[0].qjsd_minus;
            const double bound = 10.0 * eps * (1.0 + lim.qjsd_value);
            r.slack = bound - lim.records[0].difference;
            r.pass = lim.records[0].pass;
        } catch (const std::exception& e) {
            r.error = e.what();
            r.pass = false;
        }
        return r;
    });
    rep.finalize();
    return rep;
}

// PSD-to-cnd implication on random 3x3 nonnegative PSD instances (Gram
// matrices of nonnegative vectors; rank-deficient cases mixed in).
inline VerificationReport cnd_theorem_suite(const SuiteConfig& cfg) {
    VerificationReport rep;
    rep.suite = "cnd-theorem";
    rep.spec_name = "cnd";
    rep.trials = cfg.trials;
    rep.dims = {3};
    rep.seed = cfg.seed;

    detail::run_trials(cfg.trials, cfg.threads, rep.records, [&](int trial) {
        TrialRecord r;
        r.trial = trial;
        r.dim = 3;
        Rng rng(derive_stream_seed(cfg.seed, trial));
        const int rank = 1 + trial % 3;
        double v[3][3] = {};
        for (auto& row : v)
            for (int k = 0; k < rank; ++k) row[k] = rng.uniform(0.0, 1.0);
        Sym3 d{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) d[i][j] += v[i][k] * v[j][k];
        try {
            const auto res = check_cnd_theorem(d);
            r.d_xy = d[0][1];
            r.d_yz = d[1][2];
            r.d_xz = d[0][2];
            r.pass = res.psd_d && res.implications_hold;
            r.slack = r.pass ? 0.0 : -1.0;
        } catch (const std::exception& e) {
            r.error = e.what();
            r.pass = false;
        }
        return r;
    });
    rep.finalize();
    return rep;
}

// cm_transform_check over random unit-trace triples and a fixed t ladder.
inline VerificationReport cm_transform_suite(const SuiteConfig& cfg, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw input_error("cm_transform_suite: alpha must lie in (0, 1)");
    VerificationReport rep;
    rep.suite = "cm-transform";
    rep.spec_name = "cm-transform";
    rep.spec_alpha = alpha;
    rep.trials = cfg.trials;
    rep.dims = cfg.dims;
    rep.seed = cfg.seed;
    rep.unit_trace = true;

    detail::run_trials(cfg.trials, cfg.threads, rep.records, [&](int trial) {
        TrialRecord r;
        r.trial = trial;
        r.dim = cfg.dims[static_cast<std::size_t>(trial) % cfg.dims.size()];
        const std::uint64_t stream = derive_stream_seed(cfg.seed, trial);
        try {
            const HermitianMatrix x = detail::draw(stream, 0, r.dim, true);
            const HermitianMatrix y = detail::draw(stream, 1, r.dim, true);
            const HermitianMatrix z = detail::draw(stream, 2, r.dim, true);
            r.pass = true;
            for (double t : {0.0, 0.5, 1.0, 10.0, 100.0})
                if (!cm_transform_check(x, y, z, alpha, t).all()) r.pass = false;
            r.slack = r.pass ? 0.0 : -1.0;
        } catch (const std::exception& e) {
            r.error = e.what();
            r.pass = false;
        }
        return r;
    });
    rep.finalize();
    return rep;
}

// Two evaluation paths of Delta_alpha must coincide: d_xy/d_yz hold the two
// values, slack = tol - relative difference.
inline VerificationReport reduction_suite(const SuiteConfig& cfg, double alpha,
                                          double tol = 1e-10) {
    VerificationReport rep;
    rep.suite = "reduction";
    rep.spec_name = "delta-alpha";
    rep.spec_alpha = alpha;
    rep.trials = cfg.trials;
    rep.dims = cfg.dims;
    rep.seed = cfg.seed;

    detail::run_trials(cfg.trials, cfg.threads, rep.records, [&](int trial) {
        TrialRecord r;
        r.trial = trial;
        r.dim = cfg.dims[static_cast<std::size_t>(trial) % cfg.dims.size()];
        const std::uint64_t stream = derive_stream_seed(cfg.seed, trial);
        try {
            const HermitianMatrix x = detail::draw(stream, 0, r.dim, false);
            const HermitianMatrix y = detail::draw(stream, 1, r.dim, false);
            r.d_xy = js_tsallis_relative(x, y, alpha);
            r.d_yz = js_tsallis_relative_reduced(x, y, alpha);
            const double rel = std::abs(r.d_xy - r.d_yz) / (1.0 + std::abs(r.d_xy));
            r.d_xz = rel;
            r.slack = tol - rel;
            r.pass = rel <= tol;
        } catch (const std::exception& e) {
            r.error = e.what();
            r.pass = false;
        }
        return r;
    });
    rep.finalize();
    return rep;
}

}  // namespace hpdiv
