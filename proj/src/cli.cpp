#include "cdspectra/cli.hpp"

#include <cmath>
#include <string>

#include "cdspectra/errors.hpp"
#include "cdspectra/operators.hpp"
#include "cdspectra/physics.hpp"
#include "cdspectra/properties.hpp"
#include "cdspectra/report.hpp"

namespace cdspectra {

using nlohmann::json;

namespace {

const char* mode_name(EntryMode mode) {
    return mode == EntryMode::Alternative ? "alternative" : "generic";
}

int exit_from_checks(const std::vector<Check>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return kExitCheckFailed;
    return kExitOk;
}

}  // namespace

CommandResult cmd_table(int level) {
    if (level < 0 || level > 4)
        throw InputError("table: level must be in [0, 4] (table size 2^n x 2^n)");
    const std::size_t n = std::size_t{1} << level;

    json rows = json::array();
    bool signed_basis_ok = true;
    bool xor_law_ok = true;
    bool antisymmetric_ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < n; ++j) {
            const CdElement p = multiply(basis_element(level, i), basis_element(level, j));
            std::size_t index = 0;
            int nonzero = 0;
            for (std::size_t m = 0; m < n; ++m) {
                if (std::fabs(p.coords[m]) > 1e-12) {
                    ++nonzero;
                    index = m;
                }
            }
            const double value = p.coords[index];
            if (nonzero != 1 || std::fabs(std::fabs(value) - 1.0) > 1e-12)
                signed_basis_ok = false;
            if (index != (i ^ j)) xor_law_ok = false;
            row.push_back((value < 0 ? "-e" : "e") + std::to_string(index));
        }
        rows.push_back(std::move(row));
    }
    // off-diagonal imaginary pairs must anticommute
    for (std::size_t i = 1; i < n && antisymmetric_ok; ++i) {
        for (std::size_t j = 1; j < n; ++j) {
            if (i == j) continue;
            const CdElement ab = multiply(basis_element(level, i), basis_element(level, j));
            const CdElement ba = multiply(basis_element(level, j), basis_element(level, i));
            if (norm(add(ab, ba)) > 1e-12) {
                antisymmetric_ok = false;
                break;
            }
        }
    }

    std::vector<Check> checks{
        {"products_are_signed_basis", signed_basis_ok, "every e_i e_j is +-e_k"},
        {"xor_index_law", xor_law_ok, "e_i e_j lands on e_(i xor j)"},
        {"imaginary_anticommute", antisymmetric_ok, "e_i e_j = -e_j e_i for i != j >= 1"},
    };
    CommandResult out;
    out.report = make_report("table", json{{"level", level}}, json{{"table", rows}}, checks);
    out.exit_code = exit_from_checks(checks);
    out.summary = "table: level " + std::to_string(level) + ", " + std::to_string(n) + "x" +
                  std::to_string(n) + (out.exit_code == 0 ? ", checks ok" : ", CHECK FAILED");
    return out;
}

CommandResult cmd_props(int level, int trials, std::uint64_t seed) {
    const PropertyReport report = property_report(level, trials, seed);

    std::vector<Check> checks;
    for (const auto& r : report.results) {
        const auto max_level = identity_max_level(r.identity);
        const bool expected = !max_level || level <= *max_level;
        bool pass = r.holds == expected;
        std::string detail = std::string(identity_name(r.identity)) +
                             (expected ? " expected to hold" : " expected to fail") +
                             ", max residual " + std::to_string(r.max_residual);
        if (!expected) {
            // a failure must come with a live witness
            pass = pass && r.witness && r.witness_residual > kWitnessThreshold;
            if (r.witness) detail += ", witness residual " + std::to_string(r.witness_residual);
        }
        checks.push_back({std::string(identity_name(r.identity)) + "_ladder", pass, detail});
    }

    CommandResult out;
    out.report = make_report(
        "props", json{{"level", level}, {"trials", trials}, {"seed", seed}},
        json{{"property_report", to_json(report)}}, checks);
    out.exit_code = exit_from_checks(checks);
    out.summary = "props: level " + std::to_string(level) + ", " + std::to_string(trials) +
                  " trials" + (out.exit_code == 0 ? ", ladder ok" : ", LADDER CHECK FAILED");
    return out;
}

CommandResult cmd_spectrum(int level, std::uint64_t seed, EntryMode mode,
                           double cluster_tol) {
    if (level < 0 || level > kMaxLevel) throw InputError("spectrum: bad level");

    json results;
    std::vector<Check> checks;

    if (mode == EntryMode::Alternative) {
        if (level < 4) throw InputError("spectrum: alternative mode needs level >= 4");
        const GenericDraw draw = make_generic_alternative_draw(level, seed, cluster_tol);
        results["element"] = to_json(draw.element);
        results["norm_sq"] = norm_sq(draw.element);
        results["delta"] = delta(draw.element);
        results["spectrum"] = to_json(draw.spectrum);
        results["profile"] = to_json(draw.profile);
        results["resamples"] = draw.resamples;

        const int k = std::min(level - 4, 4);
        const ThetaFit fit = fit_theta_pattern(draw.spectrum, delta(draw.element), k);
        results["theta_fit"] = to_json(fit);

        bool mult_ok = true;
        for (const auto& c : draw.spectrum.clusters)
            if (std::fabs(c.value) > draw.spectrum.cluster_threshold &&
                c.multiplicity % 4 != 0)
                mult_ok = false;
        checks.push_back({"even_spectrum", draw.profile.is_even_spectrum,
                          "clusters symmetric under negation"});
        checks.push_back({"quadruple_multiplicities", mult_ok,
                          "nonzero cluster multiplicities are multiples of 4"});
        checks.push_back(
            {"distinct_nonneg_count",
             draw.profile.distinct_nonneg ==
                 static_cast<int>(expected_distinct_nonneg(level)),
             "expected " + std::to_string(expected_distinct_nonneg(level)) + ", observed " +
                 std::to_string(draw.profile.distinct_nonneg)});
    } else {
        const CdElement x = random_element(level, seed);
        const SpectrumMultiset sp = shifted_spectrum(x, cluster_tol);
        results["element"] = to_json(x);
        results["norm_sq"] = norm_sq(x);
        if (level >= 1) results["delta"] = delta(x);
        results["spectrum"] = to_json(sp);
        results["profile"] = to_json(profile_from_multiset(sp, level));
        if (level <= 3) {
            const bool division_algebra =
                sp.clusters.size() == 1 &&
                std::fabs(sp.clusters.front().value) <= sp.cluster_threshold;
            checks.push_back({"division_algebra_spectrum", division_algebra,
                              "single zero cluster below the sedenions"});
        }
    }

    CommandResult out;
    out.report = make_report("spectrum",
                             json{{"level", level},
                                  {"seed", seed},
                                  {"mode", mode_name(mode)},
                                  {"cluster_tol", cluster_tol}},
                             results, checks);
    out.exit_code = exit_from_checks(checks);
    out.summary = std::string("spectrum: level ") + std::to_string(level) + ", mode " +
                  mode_name(mode) +
                  (out.exit_code == 0 ? ", checks ok" : ", CHECK FAILED");
    return out;
}

CommandResult cmd_inclusion(int level, EntryMode mode, int trials, std::uint64_t seed,
                            double subset_tol) {
    const InclusionReport report = inclusion_check(level, mode, trials, seed, subset_tol);
    std::vector<Check> checks{
        {"inclusion_as_expected", report.as_expected,
         report.expected_all_hold
             ? "all " + std::to_string(trials) + " trials expected to include; " +
                   std::to_string(report.hold_count) + " did"
             : "at least one violation expected; found " +
                   std::to_string(report.violation_trials.size())}};

    CommandResult out;
    out.report = make_report("inclusion",
                             json{{"level", level},
                                  {"mode", mode_name(mode)},
                                  {"trials", trials},
                                  {"seed", seed},
                                  {"subset_tol", subset_tol}},
                             json{{"inclusion", to_json(report)}}, checks);
    out.exit_code = exit_from_checks(checks);
    out.summary = "inclusion: level " + std::to_string(level) + ", mode " + mode_name(mode) +
                  ", " + std::to_string(report.hold_count) + "/" + std::to_string(trials) +
                  " held" + (out.exit_code == 0 ? " (as expected)" : " (UNEXPECTED)");
    return out;
}

CommandResult cmd_dimension(int plet_size, int level) {
    const DimensionReport report = dimension_obstruction(plet_size, level);
    CommandResult out;
    out.report = make_report("dimension",
                             json{{"plet_size", plet_size}, {"level", level}},
                             json{{"dimension", to_json(report)}}, {});
    out.exit_code = kExitOk;
    out.summary = "dimension: " + std::to_string(plet_size) + "-plet vs level " +
                  std::to_string(level) + " -> " +
                  std::to_string(report.distinct_value_count) +
                  (report.match ? " (match)" : " (mismatch)");
    return out;
}

CommandResult cmd_mass(const std::string& data_path, const std::string& which, double z) {
    const MesonTable table = load_meson_data(data_path);

    struct Expectation {
        const char* name;
        FormulaResult (*eval)(const MesonTable&, double);
        Verdict expected;
    };
    // the vector relation failing IS the expected outcome; both baselines
    // evaluate to tension on the shipped table (frozen as fixtures in tests)
    static const Expectation kFormulas[] = {
        {"formula16", mass_formula_16, Verdict::Consistent},
        {"gmo", gmo_check, Verdict::Tension},
        {"burakovsky", burakovsky_check, Verdict::Tension},
        {"vector", vector_analogue, Verdict::Tension},
    };

    bool any = false;
    json results;
    std::vector<Check> checks;
    for (const auto& f : kFormulas) {
        if (which != "all" && which != f.name) continue;
        any = true;
        const FormulaResult r = f.eval(table, z);
        results[f.name] = to_json(r);
        checks.push_back({std::string(f.name) + "_verdict_as_expected",
                          r.verdict == f.expected,
                          std::string("expected ") + verdict_name(f.expected) + ", got " +
                              verdict_name(r.verdict)});
        if (std::string(f.name) == "vector") {
            if (const auto note = rho_mass_note(table)) {
                results["delta_m_rho_note"] =
                    json{{"m_rho0", note->m_rho0},
                         {"sigma_rho0", note->sigma_rho0},
                         {"m_rho_plus", note->m_rho_plus},
                         {"sigma_rho_plus", note->sigma_rho_plus},
                         {"delta_m_rho", note->delta_m_rho},
                         {"sigma_delta", note->sigma_delta}};
            }
        }
    }
    if (!any)
        throw InputError("mass: unknown formula '" + which +
                         "' (expected formula16|gmo|burakovsky|vector|all)");

    CommandResult out;
    out.report = make_report("mass",
                             json{{"data", data_path}, {"which", which}, {"z", z}},
                             results, checks);
    out.exit_code = exit_from_checks(checks);
    out.summary = "mass: " + which +
                  (out.exit_code == 0 ? ", verdicts as expected" : ", UNEXPECTED VERDICT");
    return out;
}

}  // namespace cdspectra
