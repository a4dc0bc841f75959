#include "cdspectra/report.hpp"

namespace cdspectra {

using nlohmann::json;

json to_json(const CdElement& x) {
    return json{{"level", x.level}, {"coords", x.coords}};
}

json to_json(const SpectrumMultiset& s) {
    json clusters = json::array();
    for (const auto& c : s.clusters)
        clusters.push_back(json{{"value", c.value}, {"multiplicity", c.multiplicity}});
    return json{{"clusters", clusters}, {"cluster_threshold", s.cluster_threshold}};
}

json to_json(const DegeneracyProfile& p) {
    return json{{"level", p.level},
                {"is_even_spectrum", p.is_even_spectrum},
                {"quadruple_count", p.quadruple_count},
                {"distinct_nonneg", p.distinct_nonneg},
                {"max_pairing_residual", p.max_pairing_residual}};
}

json to_json(const ThetaFit& f) {
    return json{{"k", f.k},
                {"delta", f.delta},
                {"thetas", f.thetas},
                {"fitted_values", f.fitted_values},
                {"observed_values", f.observed_values},
                {"residual", f.residual},
                {"structural_match", f.structural_match}};
}

json to_json(const InclusionReport& r) {
    json trials = json::array();
    for (const auto& t : r.per_trial) {
        trials.push_back(json{{"sub_seed", t.sub_seed},
                              {"entry1_included", t.entry1_included},
                              {"entry2_included", t.entry2_included}});
    }
    return json{{"level", r.level},
                {"mode", r.mode == EntryMode::Alternative ? "alternative" : "generic"},
                {"trials", r.trials},
                {"seed", r.seed},
                {"per_trial", trials},
                {"hold_count", r.hold_count},
                {"violation_trials", r.violation_trials},
                {"expected_all_hold", r.expected_all_hold},
                {"as_expected", r.as_expected}};
}

json to_json(const DimensionReport& r) {
    return json{{"plet_size", r.plet_size},
                {"level", r.level},
                {"algebra_dim", r.algebra_dim},
                {"distinct_value_count", r.distinct_value_count},
                {"match", r.match}};
}

json to_json(const PropertyReport& r) {
    json identities = json::object();
    for (const auto& res : r.results) {
        json entry{{"holds", res.holds}, {"max_residual", res.max_residual}};
        if (res.witness) {
            json w = json::array();
            for (const auto& e : *res.witness) w.push_back(to_json(e));
            entry["witness"] = w;
            entry["witness_residual"] = res.witness_residual;
        }
        identities[identity_name(res.identity)] = std::move(entry);
    }
    return json{{"level", r.level},
                {"trials", r.trials},
                {"seed", r.seed},
                {"identities", identities}};
}

json to_json(const FormulaResult& r) {
    return json{{"name", r.name},
                {"lhs", r.lhs},
                {"sigma_lhs", r.sigma_lhs},
                {"rhs", r.rhs},
                {"sigma_rhs", r.sigma_rhs},
                {"ratio", r.ratio},
                {"sigma_ratio", r.sigma_ratio},
                {"z_threshold", r.z_threshold},
                {"verdict", verdict_name(r.verdict)}};
}

json to_json(const std::vector<Check>& checks) {
    json arr = json::array();
    for (const auto& c : checks)
        arr.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return arr;
}

json make_report(const std::string& command, json parameters, json results,
                 const std::vector<Check>& checks) {
    return json{{"command", command},
                {"tool_version", kToolVersion},
                {"parameters", std::move(parameters)},
                {"results", std::move(results)},
                {"checks", to_json(checks)}};
}

std::string render_report(const json& report) { return report.dump(2) + "\n"; }

}  // namespace cdspectra
