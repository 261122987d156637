// hpdiv: compute divergences on HPD matrices, generate test instances, and
// run verification suites.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hpdiv/hpdiv.hpp"

namespace {

using namespace hpdiv;

bool g_verbose = false;

void log_event(const nlohmann::json& j) {
    if (g_verbose) std::cerr << j.dump() << "\n";
}

// JSON with every real at 17 significant digits, so values re-parse losslessly.
nlohmann::json real_json(double v) {
    return nlohmann::json::parse(format_real(v), nullptr, true);
}

std::vector<int> parse_dims(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        const int d = std::stoi(text);
        if (d < 1) throw input_error("--dims: dimensions must be >= 1");
        return {d};
    }
    const int a = std::stoi(text.substr(0, colon));
    const int b = std::stoi(text.substr(colon + 1));
    if (a < 1 || b < a) throw input_error("--dims: expected a:b with 1 <= a <= b");
    std::vector<int> dims;
    for (int d = a; d <= b; ++d) dims.push_back(d);
    return dims;
}

int cmd_compute(const std::string& kind, double alpha, const std::string& fkind,
                const std::string& path_a, const std::string& path_b) {
    const DivergenceSpec spec = parse_divergence_spec(kind, alpha, fkind);
    const HermitianMatrix a = read_matrix(path_a);
    const HermitianMatrix b = read_matrix(path_b);
    check_same_dim(a, b);
    const bool unit_a = std::abs(a.trace() - 1.0) <= 1e-8;
    const bool unit_b = std::abs(b.trace() - 1.0) <= 1e-8;
    if (spec.requires_unit_trace() && !(unit_a && unit_b))
        throw domain_error(spec.name() + ": inputs must have unit trace");
    log_event({{"event", "compute"}, {"kind", spec.name()}, {"dim", a.dim()}});
    const double value = spec.evaluate(a, b);

    nlohmann::json params;
    if (spec.alpha != 0.0 || kind == "qjsd-alpha" || kind == "qjrd" || kind == "delta-alpha")
        params["alpha"] = real_json(spec.alpha);
    if (spec.fkind) params["fkind"] = spec.fkind->name();
    nlohmann::json out{{"kind", spec.name()},
                       {"params", params},
                       {"value", real_json(value)},
                       {"dims", {a.dim(), b.dim()}},
                       {"unitTrace", {unit_a, unit_b}}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_gen(const HpdGenConfig& cfg, const std::string& out_path) {
    const HermitianMatrix x = random_hpd(cfg);
    write_matrix(x, out_path);
    log_event({{"event", "gen"}, {"dim", cfg.dim}, {"seed", cfg.seed}, {"path", out_path}});
    return 0;
}

std::string summary_path(const std::string& csv_path) {
    const auto dot = csv_path.rfind('.');
    const std::string stem =
        (dot == std::string::npos || csv_path.find('/', dot) != std::string::npos)
            ? csv_path
            : csv_path.substr(0, dot);
    return stem + ".summary.json";
}

int emit_report(const VerificationReport& rep, const std::string& out_path) {
    std::ofstream csv(out_path);
    if (!csv) throw input_error("cannot open output file: " + out_path);
    rep.write_csv(csv);
    if (!csv) throw input_error("failed writing " + out_path);

    const nlohmann::json j = rep.summary();
    std::ofstream js(summary_path(out_path));
    if (!js) throw input_error("cannot open output file: " + summary_path(out_path));
    js << j.dump(2) << "\n";
    std::cout << j.dump(2) << "\n";
    log_event({{"event", "verify"},
               {"suite", rep.suite},
               {"violations", rep.violations},
               {"worstSlack", rep.worst_slack}});
    return rep.violations == 0 ? 0 : 1;
}

int cmd_verify(const std::string& suite, const std::string& kind, double alpha,
               const std::string& fkind, const std::string& rep_name, const SuiteConfig& cfg,
               double tol, const std::string& out_path) {
    if (suite == "triangle" || suite == "axioms") {
        const DivergenceSpec spec = parse_divergence_spec(kind, alpha, fkind);
        const auto rep = suite == "triangle" ? triangle_suite(spec, cfg) : axioms_suite(spec, cfg);
        return emit_report(rep, out_path);
    }
    if (suite == "integral")
        return emit_report(integral_suite(rep_name, alpha, tol > 0.0 ? tol : 1e-6), out_path);
    if (suite == "limit") return emit_report(limit_pairs_suite(cfg), out_path);
    if (suite == "cnd-theorem") return emit_report(cnd_theorem_suite(cfg), out_path);
    if (suite == "cm-transform") return emit_report(cm_transform_suite(cfg, alpha), out_path);
    if (suite == "reduction")
        return emit_report(reduction_suite(cfg, alpha, tol > 0.0 ? tol : 1e-10), out_path);
    throw input_error("unknown suite: " + suite);
}

int cmd_cnd(const std::string& path) {
    const HermitianMatrix x = read_matrix(path);
    if (x.dim() != 3) throw input_error("cnd: expected a 3x3 matrix");
    Sym3 m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (x(i, j).imag() != 0.0) throw input_error("cnd: matrix must be real");
            m[i][j] = x(i, j).real();
        }
    const nlohmann::json out{{"cnd", is_cnd_3x3(m)},
                             {"nonneg", m[0][1] >= 0.0 && m[0][2] >= 0.0 && m[1][2] >= 0.0},
                             {"sqrtTriangle", sqrt_triangle_3x3(m)}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"divergences, metrics, and verification suites on HPD matrices"};
    app.require_subcommand(1);
    app.add_flag("--verbose", g_verbose, "JSON-lines diagnostics on stderr");

    // compute
    auto* compute = app.add_subcommand("compute", "evaluate a divergence on two matrix files");
    std::string kind, fkind = "square";
    double alpha = 0.0;
    std::string path_a, path_b;
    compute->add_option("--kind", kind, "divergence kind")
        ->required()
        ->check(CLI::IsMember({"sdiv", "qjsd", "qjsd-alpha", "qjrd", "delta-alpha", "bregman-vn",
                               "bregman-logdet", "bregman-frob", "jensen"}));
    compute->add_option("--alpha", alpha, "order parameter");
    compute->add_option("--fkind", fkind, "scalar function for --kind jensen")
        ->check(CLI::IsMember({"square", "xlogx", "neglog", "power-low", "power-high"}));
    compute->add_option("A", path_a, "first matrix JSON file")->required();
    compute->add_option("B", path_b, "second matrix JSON file")->required();

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random HPD matrix file");
    HpdGenConfig gen_cfg;
    std::string gen_out;
    gen->add_option("--dim", gen_cfg.dim, "matrix dimension")->required();
    gen->add_option("--seed", gen_cfg.seed, "RNG seed")->required();
    gen->add_option("--log-eig-min", gen_cfg.log_eig_min, "log10 of smallest eigenvalue");
    gen->add_option("--log-eig-max", gen_cfg.log_eig_max, "log10 of largest eigenvalue");
    gen->add_flag("--unit-trace", gen_cfg.unit_trace, "rescale to unit trace");
    gen->add_option("-o,--output", gen_out, "output path")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite; writes CSV + summary");
    std::string suite, vkind = "sdiv", vfkind = "square", rep_name = "power-low", dims = "2:6";
    std::string verify_out;
    double valpha = 0.5, vtol = 0.0;
    SuiteConfig suite_cfg;
    verify->add_option("suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember(
            {"triangle", "axioms", "integral", "limit", "cnd-theorem", "cm-transform",
             "reduction"}));
    verify->add_option("--kind", vkind, "divergence kind for triangle/axioms");
    verify->add_option("--alpha", valpha, "order parameter");
    verify->add_option("--fkind", vfkind, "scalar function for --kind jensen");
    verify->add_option("--rep", rep_name, "representation for the integral suite")
        ->check(CLI::IsMember({"power-low", "power-high", "log"}));
    verify->add_option("--dims", dims, "dimension range a:b, inclusive");
    verify->add_option("--trials", suite_cfg.trials, "number of trials");
    verify->add_option("--seed", suite_cfg.seed, "RNG seed");
    verify->add_option("--tol", vtol, "tolerance override");
    verify->add_option("--threads", suite_cfg.threads, "worker threads (0 = all cores)");
    verify->add_option("-o,--output", verify_out, "CSV output path")->required();

    // cnd
    auto* cnd = app.add_subcommand("cnd", "evaluate 3x3 cnd predicates on a matrix file");
    std::string cnd_path;
    cnd->add_option("M", cnd_path, "3x3 symmetric matrix JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*compute) return cmd_compute(kind, alpha, fkind, path_a, path_b);
        if (*gen) return cmd_gen(gen_cfg, gen_out);
        if (*verify) {
            suite_cfg.dims = parse_dims(dims);
            if (vtol > 0.0 && suite != "integral" && suite != "reduction")
                suite_cfg.slack_tol = vtol;
            return cmd_verify(suite, vkind, valpha, vfkind, rep_name, suite_cfg, vtol,
                              verify_out);
        }
        if (*cnd) return cmd_cnd(cnd_path);
    } catch (const numerical_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
