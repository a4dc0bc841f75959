// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria.
//
// usage: acceptance <cdspectra-binary> <meson-data-file>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cdspectra/cli.hpp"
#include "cdspectra/element.hpp"
#include "cdspectra/errors.hpp"
#include "cdspectra/matrix.hpp"
#include "cdspectra/properties.hpp"
#include "cdspectra/report.hpp"
#include "cdspectra/rng.hpp"
#include "cdspectra/spectral.hpp"
#include "cdspectra/structure.hpp"

using namespace cdspectra;

namespace {

std::string g_binary;
std::string g_data;

struct ProcessResult {
    std::string output;
    int exit_code = -1;
};

ProcessResult run_process(const std::string& command) {
    ProcessResult result;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return result;
    char buffer[4096];
    std::size_t n = 0;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.output.append(buffer, n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SymMatrix random_symmetric(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    DenseMatrix m = DenseMatrix::zero(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const double v = rng.symmetric();
            m.at(i, j) = v;
            m.at(j, i) = v;
        }
    }
    return make_symmetric(std::move(m));
}

// --- criterion 1: identity ladder ------------------------------------------
Outcome criterion_identity_ladder() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t seed = 0xC0FFEE;
    std::vector<std::string> problems;

    for (int level = 0; level <= 7; ++level) {
        const PropertyReport rep = property_report(level, 1000, mix_seed(seed, level));
        const auto check = [&](Identity id, bool expect_hold) {
            const auto& r = rep.result(id);
            if (expect_hold) {
                if (!(r.holds && r.max_residual <= 1e-10))
                    problems.push_back(std::string(identity_name(id)) + "@" +
                                       std::to_string(level) + " should hold");
            } else {
                if (r.holds || !r.witness || r.witness_residual <= 1e-6)
                    problems.push_back(std::string(identity_name(id)) + "@" +
                                       std::to_string(level) + " should fail with witness");
            }
        };
        check(Identity::Commutative, level <= 1);
        check(Identity::Associative, level <= 2);
        check(Identity::Alternative, level <= 3);
        check(Identity::Flexible, true);
    }
    const double dt = seconds_since(t0);
    if (dt >= 10.0) problems.push_back("runtime " + std::to_string(dt) + "s >= 10s");

    Outcome out;
    out.pass = problems.empty();
    out.detail = problems.empty()
                     ? "ladder exact at all 8 levels, 1000 samples each, " +
                           std::to_string(dt).substr(0, 4) + "s"
                     : problems.front() + " (+" + std::to_string(problems.size() - 1) +
                           " more)";
    return out;
}

// --- criterion 2: division-algebra spectra ---------------------------------
Outcome criterion_division_spectra() {
    const auto t0 = std::chrono::steady_clock::now();
    int bad = 0;
    for (int level = 0; level <= 3; ++level) {
        for (int t = 0; t < 100; ++t) {
            const CdElement x = random_element(level, mix_seed(0xD1CE, 100 * level + t));
            const SpectrumMultiset s = shifted_spectrum(x, 1e-8);
            const bool ok = s.clusters.size() == 1 &&
                            std::fabs(s.clusters[0].value) <= s.cluster_threshold &&
                            s.clusters[0].multiplicity == (std::size_t{1} << level);
            if (!ok) ++bad;
        }
    }
    const double dt = seconds_since(t0);
    Outcome out;
    out.pass = bad == 0 && dt < 5.0;
    out.detail = std::to_string(400 - bad) + "/400 single zero clusters, " +
                 std::to_string(dt).substr(0, 4) + "s";
    return out;
}

// --- criterion 3: S4 closed form (as stated: +-delta^2) ---------------------
Outcome criterion_s4_closed_form() {
    const auto t0 = std::chrono::steady_clock::now();
    int literal_ok = 0, corrected_ok = 0;
    for (int t = 0; t < 100; ++t) {
        const CdElement x = random_element(4, mix_seed(0x5ED4, t));
        const double d = delta(x);
        const SpectrumMultiset s = shifted_spectrum(x);
        if (s.clusters.size() != 3) continue;
        const auto& lo = s.clusters[0];
        const auto& mid = s.clusters[1];
        const auto& hi = s.clusters[2];
        const bool shape = lo.multiplicity == 4 && mid.multiplicity == 8 &&
                           hi.multiplicity == 4 &&
                           std::fabs(mid.value) <= s.cluster_threshold;
        if (!shape) continue;
        if (std::fabs(hi.value - d * d) <= 1e-8 * d * d &&
            std::fabs(lo.value + d * d) <= 1e-8 * d * d)
            ++literal_ok;
        if (std::fabs(hi.value - d) <= 1e-8 * d && std::fabs(lo.value + d) <= 1e-8 * d)
            ++corrected_ok;
    }
    const double dt = seconds_since(t0);
    Outcome out;
    out.pass = literal_ok == 100 && dt < 10.0;
    out.detail = "clusters {0x8, +D^2x4, -D^2x4}: " + std::to_string(literal_ok) +
                 "/100 matched; [diagnostic] corrected first-power form {0x8, +Dx4, -Dx4}: " +
                 std::to_string(corrected_ok) + "/100 matched, " +
                 std::to_string(dt).substr(0, 4) + "s";
    return out;
}

// --- criterion 4: inclusion at desk scale ----------------------------------
Outcome criterion_inclusion() {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> problems;
    int holds = 0;
    for (int level : {5, 6, 7}) {
        const InclusionReport rep =
            inclusion_check(level, EntryMode::Alternative, 20, mix_seed(0xA17, level));
        holds += rep.hold_count;
        if (rep.hold_count != 20)
            problems.push_back("level " + std::to_string(level) + ": " +
                               std::to_string(rep.hold_count) + "/20 held");
    }
    const InclusionReport generic = inclusion_check(5, EntryMode::Generic, 50, 0xFa11);
    std::string witness = "none";
    if (generic.violation_trials.empty()) {
        problems.push_back("no generic violation in 50 trials");
    } else {
        const int t = generic.violation_trials.front();
        witness = std::to_string(generic.per_trial[static_cast<std::size_t>(t)].sub_seed);
    }
    const double dt = seconds_since(t0);
    if (dt >= 120.0) problems.push_back("runtime >= 2min");

    Outcome out;
    out.pass = problems.empty();
    out.detail = problems.empty()
                     ? "alternative " + std::to_string(holds) + "/60 held; generic level 5: " +
                           std::to_string(generic.violation_trials.size()) +
                           "/50 violations, first witness seed " + witness + ", " +
                           std::to_string(dt).substr(0, 5) + "s"
                     : problems.front();
    return out;
}

// --- criterion 5: quadruple degeneracy, evenness, cos-sum fit ---------------
Outcome criterion_degeneracy_and_fit() {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> problems;
    std::string fit_counts;
    bool fits_ok = true;

    for (int level : {5, 6, 7}) {
        int even = 0, mult4 = 0, counts = 0, fits = 0;
        for (int t = 0; t < 20; ++t) {
            GenericDraw draw;
            try {
                draw = make_generic_alternative_draw(level, mix_seed(0xE58 + level, t));
            } catch (const GenerationError&) {
                problems.push_back("level " + std::to_string(level) +
                                   ": generic draw exhausted resamples");
                continue;
            }
            if (draw.profile.is_even_spectrum) ++even;
            bool m4 = true;
            for (const auto& c : draw.spectrum.clusters)
                if (std::fabs(c.value) > draw.spectrum.cluster_threshold &&
                    c.multiplicity % 4 != 0)
                    m4 = false;
            if (m4) ++mult4;
            if (draw.profile.distinct_nonneg ==
                static_cast<int>(expected_distinct_nonneg(level)))
                ++counts;
            const ThetaFit fit =
                fit_theta_pattern(draw.spectrum, delta(draw.element), level - 4);
            if (fit.structural_match) ++fits;
        }
        if (even != 20)
            problems.push_back("level " + std::to_string(level) + ": evenness " +
                               std::to_string(even) + "/20");
        if (mult4 != 20)
            problems.push_back("level " + std::to_string(level) + ": multiplicity-of-4 " +
                               std::to_string(mult4) + "/20");
        if (counts != 20)
            problems.push_back("level " + std::to_string(level) + ": distinct count " +
                               std::to_string(counts) + "/20");
        if (fits < 18) fits_ok = false;
        fit_counts += std::to_string(fits) + "/20 ";
    }
    const double dt = seconds_since(t0);

    Outcome out;
    out.pass = problems.empty() && fits_ok;
    std::string structural = problems.empty()
                                 ? "evenness, multiplicities and 2^(n-3) counts 20/20 at "
                                   "levels 5-7"
                                 : problems.front();
    out.detail = structural + "; cos-sum fit matched " + fit_counts +
                 "(need >= 18/20 per level), " + std::to_string(dt).substr(0, 5) + "s";
    return out;
}

// --- criterion 6: eigensolver oracle ----------------------------------------
Outcome criterion_eigensolver_oracle() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t sizes[] = {16, 64, 128};
    int bad = 0;
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = sizes[t % 3];
        const SymMatrix a = random_symmetric(n, mix_seed(0x09AC1E, t));
        const Spectrum s = jacobi_eigen(a);

        double sum = 0.0, sum_sq = 0.0;
        for (double v : s.eigenvalues) {
            sum += v;
            sum_sq += v * v;
        }
        const double tr = trace(a.mat);
        const double fro_sq = std::pow(frobenius_norm(a.mat), 2);
        const double scale = 1.0 + std::max(std::fabs(tr), fro_sq);
        const double spectral_scale =
            std::max(std::fabs(s.eigenvalues.front()), std::fabs(s.eigenvalues.back()));
        const bool ok = std::fabs(sum - tr) <= 1e-9 * scale &&
                        std::fabs(sum_sq - fro_sq) <= 1e-9 * scale &&
                        s.residual <= 1e-8 * (1.0 + spectral_scale);
        if (!ok) ++bad;
    }
    const double dt = seconds_since(t0);
    Outcome out;
    out.pass = bad == 0;
    out.detail = std::to_string(50 - bad) +
                 "/50 matrices satisfied trace, Frobenius and residual bounds, " +
                 std::to_string(dt).substr(0, 5) + "s";
    return out;
}

// --- criterion 7: headline mass ratio through the CLI -----------------------
Outcome criterion_headline_number() {
    const auto t0 = std::chrono::steady_clock::now();
    const ProcessResult run =
        run_process(g_binary + " mass --which formula16 --data '" + g_data + "' 2>/dev/null");
    const double dt = seconds_since(t0);

    Outcome out;
    if (run.exit_code != 0) {
        out.detail = "exit code " + std::to_string(run.exit_code);
        return out;
    }
    try {
        const auto doc = nlohmann::json::parse(run.output);
        const double ratio = doc["results"]["formula16"]["ratio"];
        const double sigma = doc["results"]["formula16"]["sigma_ratio"];
        const std::string verdict = doc["results"]["formula16"]["verdict"];
        const bool ratio_ok = std::fabs(ratio - 1.00033) <= 1e-5;
        const bool sigma_ok = std::fabs(sigma - 0.00035) <= 1e-5;
        out.pass = ratio_ok && sigma_ok && verdict == "consistent" && dt < 1.0;
        std::ostringstream os;
        os.precision(6);
        os << "ratio " << ratio << " (want 1.00033 +- 1e-5), sigma " << sigma
           << " (want 0.00035 +- 1e-5), verdict " << verdict << ", " << dt << "s";
        out.detail = os.str();
    } catch (const std::exception& e) {
        out.detail = std::string("cannot parse CLI output: ") + e.what();
    }
    return out;
}

// --- criterion 8: vector-meson failure through the CLI ----------------------
Outcome criterion_vector_failure() {
    const ProcessResult run =
        run_process(g_binary + " mass --which vector --data '" + g_data + "' 2>/dev/null");
    Outcome out;
    try {
        const auto doc = nlohmann::json::parse(run.output);
        const std::string verdict = doc["results"]["vector"]["verdict"];
        out.pass = verdict == "tension" && run.exit_code == 0;
        out.detail = "verdict " + verdict + ", exit code " + std::to_string(run.exit_code) +
                     " (tension is the expected outcome)";
    } catch (const std::exception& e) {
        out.detail = std::string("cannot parse CLI output: ") + e.what();
    }
    return out;
}

// --- criterion 9: dimension obstruction -------------------------------------
Outcome criterion_dimension() {
    const DimensionReport r8 = dimension_obstruction(8, 6);
    const DimensionReport r16 = dimension_obstruction(16, 7);
    const DimensionReport r25 = dimension_obstruction(25, 8);
    Outcome out;
    out.pass = r8.match && r16.match && !r25.match && r25.distinct_value_count == 32;
    out.detail = "(8, level 6) " + std::string(r8.match ? "match" : "MISMATCH") +
                 "; (16, level 7) " + (r16.match ? "match" : "MISMATCH") +
                 "; (25, level 8) " +
                 (!r25.match ? "mismatch 32 > 25 as required" : "UNEXPECTED MATCH");
    return out;
}

// --- criterion 10: determinism ----------------------------------------------
Outcome criterion_determinism() {
    std::vector<std::function<std::string()>> runs = {
        [] { return render_report(cmd_table(3).report); },
        [] { return render_report(cmd_props(4, 200, 0xD5).report); },
        [] { return render_report(cmd_spectrum(5, 0xD5, EntryMode::Alternative).report); },
        [] { return render_report(cmd_spectrum(6, 0xD6, EntryMode::Alternative).report); },
        [] { return render_report(cmd_inclusion(5, EntryMode::Generic, 10, 0xD7).report); },
        [] { return render_report(cmd_dimension(25, 8).report); },
        [] { return render_report(cmd_mass(g_data, "all", 2.0).report); },
    };
    int identical = 0;
    for (auto& run : runs)
        if (run() == run()) ++identical;

    const std::string spectrum_cmd =
        g_binary + " spectrum --level 5 --mode alternative --seed 77 2>/dev/null";
    const std::string mass_cmd = g_binary + " mass --data '" + g_data + "' 2>/dev/null";
    const bool process_identical =
        run_process(spectrum_cmd).output == run_process(spectrum_cmd).output &&
        run_process(mass_cmd).output == run_process(mass_cmd).output;

    Outcome out;
    out.pass = identical == static_cast<int>(runs.size()) && process_identical;
    out.detail = std::to_string(identical) + "/" + std::to_string(runs.size()) +
                 " in-process reports byte-identical; CLI double runs " +
                 (process_identical ? "byte-identical" : "DIFFERED");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: acceptance <cdspectra-binary> <meson-data-file>\n");
        return 64;
    }
    g_binary = argv[1];
    g_data = argv[2];

    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"identity ladder", criterion_identity_ladder},
        {"division-algebra spectra", criterion_division_spectra},
        {"S4 closed form", criterion_s4_closed_form},
        {"spectrum inclusion", criterion_inclusion},
        {"quadruple degeneracy and cos-sum fit", criterion_degeneracy_and_fit},
        {"eigensolver oracle", criterion_eigensolver_oracle},
        {"headline mass ratio", criterion_headline_number},
        {"vector-meson failure", criterion_vector_failure},
        {"dimension obstruction", criterion_dimension},
        {"determinism", criterion_determinism},
    };

    int failures = 0;
    int index = 0;
    for (const auto& c : criteria) {
        ++index;
        const Outcome outcome = c.run();
        if (!outcome.pass) ++failures;
        std::printf("criterion %2d (%s): %s - %s\n", index, c.name,
                    outcome.pass ? "PASS" : "FAIL", outcome.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/10 criteria passed\n", 10 - failures);
    return failures;
}
