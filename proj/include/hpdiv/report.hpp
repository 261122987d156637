#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hpdiv/divergences.hpp"

namespace hpdiv {

// 17 significant digits: doubles round-trip losslessly through the decimal
// serialization.
inline std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct TrialRecord {
    int trial = 0;
    int dim = 0;
    double d_xy = 0.0;
    double d_yz = 0.0;
    double d_xz = 0.0;
    double slack = 0.0;
    bool pass = true;
    std::string error;  // non-fatal per-trial evaluation failure
};

struct VerificationReport {
    std::string suite;
    std::string spec_name;
    double spec_alpha = 0.0;
    int trials = 0;
    std::vector<int> dims;
    std::uint64_t seed = 0;
    bool unit_trace = false;
    int violations = 0;
    double worst_slack = 0.0;
    std::vector<TrialRecord> records;

    void finalize() {
        violations = 0;
        worst_slack = records.empty() ? 0.0 : records.front().slack;
        for (const auto& r : records) {
            if (!r.pass) ++violations;
            if (r.slack < worst_slack) worst_slack = r.slack;
        }
    }

    void write_csv(std::ostream& os) const {
        os << "trial,dim,d_xy,d_yz,d_xz,slack,pass\n";
        for (const auto& r : records) {
            os << r.trial << ',' << r.dim << ',' << format_real(r.d_xy) << ','
               << format_real(r.d_yz) << ',' << format_real(r.d_xz) << ','
               << format_real(r.slack) << ',' << (r.pass ? 1 : 0) << '\n';
        }
    }

    nlohmann::json summary() const {
        nlohmann::json spec_json{{"kind", spec_name}};
        if (spec_alpha != 0.0) spec_json["alpha"] = spec_alpha;
        return nlohmann::json{{"suite", suite},        {"spec", spec_json},
                              {"trials", trials},      {"violations", violations},
                              {"worstSlack", worst_slack}, {"seed", seed},
                              {"unitTrace", unit_trace}};
    }
};

}  // namespace hpdiv
