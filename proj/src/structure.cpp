#include "cdspectra/structure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cdspectra/errors.hpp"
#include "cdspectra/rng.hpp"

namespace cdspectra {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

double fold_angle(double s) {
    s = std::fabs(std::fmod(s, 2.0 * std::numbers::pi));
    if (s > std::numbers::pi) s = 2.0 * std::numbers::pi - s;
    return s;  // |cos| only needs [0, pi]
}

}  // namespace

double delta(const CdElement& x) {
    if (x.level < 1) throw InputError("delta: element does not split (level 0)");
    const std::size_t h = x.dim() / 2;
    double n1 = 0.0, n2 = 0.0, ip = 0.0;
    for (std::size_t i = 1; i < h; ++i) n1 += x.coords[i] * x.coords[i];
    for (std::size_t i = h + 1; i < x.dim(); ++i) n2 += x.coords[i] * x.coords[i];
    for (std::size_t i = 1; i < h; ++i) ip += x.coords[i] * x.coords[h + i];
    double radicand = n1 * n2 - ip * ip;
    const double scale = 1.0 + n1 * n2;
    if (radicand < 0.0) {
        if (radicand < -1e-12 * scale) {
            throw InternalError("delta: radicand " + std::to_string(radicand) +
                                " below rounding allowance");
        }
        radicand = 0.0;
    }
    return 2.0 * std::sqrt(radicand);
}

std::pair<CdElement, CdElement> split_element(const CdElement& x) {
    if (x.level < 1) throw InputError("split_element: level 0 does not split");
    const std::size_t h = x.dim() / 2;
    CdElement x1 = zero_element(x.level - 1);
    CdElement x2 = zero_element(x.level - 1);
    for (std::size_t i = 0; i < h; ++i) {
        x1.coords[i] = x.coords[i];
        x2.coords[i] = x.coords[h + i];
    }
    return {std::move(x1), std::move(x2)};
}

CdElement join_entries(const CdElement& x1, const CdElement& x2) {
    if (x1.level != x2.level) throw InputError("join_entries: level mismatch");
    CdElement x = zero_element(x1.level + 1);
    const std::size_t h = x1.dim();
    for (std::size_t i = 0; i < h; ++i) {
        x.coords[i] = x1.coords[i];
        x.coords[h + i] = x2.coords[i];
    }
    return x;
}

namespace {

// family (a): random octonion in one aligned 8-coordinate block
CdElement sample_block(int level, Rng& rng) {
    CdElement e = zero_element(level);
    const std::size_t block = rng.index(e.dim() / 8);
    for (std::size_t i = 0; i < 8; ++i) e.coords[8 * block + i] = rng.symmetric();
    return e;
}

// family (b): real part plus one block that does not contain coordinate 0
CdElement sample_real_plus_block(int level, Rng& rng) {
    CdElement e = zero_element(level);
    const std::size_t blocks = e.dim() / 8;
    const std::size_t block = blocks > 1 ? 1 + rng.index(blocks - 1) : 0;
    for (std::size_t i = 0; i < 8; ++i) e.coords[8 * block + i] = rng.symmetric();
    e.coords[0] = rng.symmetric();
    return e;
}

// family (c): twisted chain through the doubling levels
CdElement sample_chain(int level, Rng& rng) {
    CdElement u = imaginary_part(random_element(3, rng.bits()));
    const double n0 = norm(u);
    if (n0 < 1e-9) return u;  // hopeless draw, predicate will reject
    u = scale(u, 1.0 / n0);
    for (int m = 4; m <= level; ++m) {
        double s = rng.symmetric(), beta = rng.symmetric(), t = rng.symmetric();
        const double n = std::sqrt(s * s + beta * beta + t * t);
        if (n < 1e-9) { s = 1.0; beta = 0.0; t = 0.0; }
        else { s /= n; beta /= n; t /= n; }
        CdElement second = scale(u, t);
        second.coords[0] += beta;
        u = join_entries(scale(u, s), second);
    }
    CdElement e = scale(u, (0.25 + rng.unit()) * (rng.unit() < 0.5 ? -1.0 : 1.0));
    e.coords[0] += rng.symmetric();
    return e;
}

CdElement sample_alternative_entry(int level, Rng& rng, double predicate_tol,
                                   std::uint64_t seed) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const double pick = rng.unit();
        CdElement candidate = pick < 0.15   ? sample_block(level, rng)
                              : pick < 0.30 ? sample_real_plus_block(level, rng)
                                            : sample_chain(level, rng);
        if (is_alternative(candidate, predicate_tol)) return candidate;
    }
    throw GenerationError("alternative-entry sampling exhausted 1000 attempts (seed " +
                          std::to_string(seed) + ")");
}

}  // namespace

CdElement make_alternative_entry_element(int level, std::uint64_t seed,
                                         double predicate_tol) {
    if (level < 4 || level > kMaxLevel) {
        throw InputError("make_alternative_entry_element: level must be in [4, " +
                         std::to_string(kMaxLevel) + "]");
    }
    Rng rng(seed);
    const CdElement x1 = sample_alternative_entry(level - 1, rng, predicate_tol, seed);
    const CdElement x2 = sample_alternative_entry(level - 1, rng, predicate_tol, seed);
    return join_entries(x1, x2);
}

DegeneracyProfile profile_from_multiset(const SpectrumMultiset& s, int level) {
    DegeneracyProfile p;
    p.level = level;
    const double thr = s.cluster_threshold;
    p.is_even_spectrum = true;
    for (const auto& c : s.clusters) {
        if (c.multiplicity == 4) ++p.quadruple_count;
        if (c.value >= -thr) ++p.distinct_nonneg;
        if (c.value > thr) {
            bool paired = false;
            for (const auto& d : s.clusters) {
                if (std::fabs(d.value + c.value) <= thr) {
                    paired = d.multiplicity == c.multiplicity;
                    if (paired)
                        p.max_pairing_residual =
                            std::max(p.max_pairing_residual, std::fabs(d.value + c.value));
                    break;
                }
            }
            if (!paired) p.is_even_spectrum = false;
        }
    }
    return p;
}

DegeneracyProfile degeneracy_profile(const CdElement& x, double cluster_tol) {
    return profile_from_multiset(shifted_spectrum(x, cluster_tol), x.level);
}

std::size_t expected_distinct_nonneg(int level) {
    return level >= 3 ? std::size_t{1} << (level - 3) : 1;
}

GenericDraw make_generic_alternative_draw(int level, std::uint64_t seed,
                                          double cluster_tol, int max_resamples) {
    for (int r = 0; r < max_resamples; ++r) {
        GenericDraw draw;
        draw.element = make_alternative_entry_element(level, mix_seed(seed, 7000 + r));
        draw.spectrum = shifted_spectrum(draw.element, cluster_tol);
        draw.profile = profile_from_multiset(draw.spectrum, level);
        draw.resamples = r;
        if (draw.profile.distinct_nonneg !=
            static_cast<int>(expected_distinct_nonneg(level)))
            continue;
        bool separated = true;
        for (std::size_t i = 0; i + 1 < draw.spectrum.clusters.size(); ++i) {
            const double gap = draw.spectrum.clusters[i + 1].value -
                               draw.spectrum.clusters[i].value;
            if (gap <= 10.0 * draw.spectrum.cluster_threshold) separated = false;
        }
        if (separated) return draw;
    }
    throw GenerationError("generic alternative draw: no generic spectrum in " +
                          std::to_string(max_resamples) + " resamples (seed " +
                          std::to_string(seed) + ")");
}

namespace {

// Predicted non-negative value multiset for angles th[0..k): the zero class
// plus, for every prefix length j, all sign patterns over th[0..j).
std::vector<double> predicted_values(double dlt, const std::vector<double>& thetas) {
    std::vector<double> sums{0.0};  // j = 0: empty sum
    std::vector<double> out{0.0};   // the zero eigenvalue class
    out.push_back(dlt);             // |cos(empty sum)| = 1
    std::vector<double> next;
    for (double th : thetas) {
        next.clear();
        for (double s : sums) {
            next.push_back(s + th);
            next.push_back(s - th);
        }
        sums = next;
        for (double s : sums) out.push_back(dlt * std::fabs(std::cos(fold_angle(s))));
    }
    std::sort(out.begin(), out.end());
    return out;
}

double match_residual(const std::vector<double>& predicted,
                      const std::vector<double>& observed) {
    if (predicted.size() == observed.size()) {
        double worst = 0.0;
        for (std::size_t i = 0; i < predicted.size(); ++i)
            worst = std::max(worst, std::fabs(predicted[i] - observed[i]));
        return worst;
    }
    // size mismatch: symmetric nearest-value discrepancy
    auto one_sided = [](const std::vector<double>& from, const std::vector<double>& to) {
        double worst = 0.0;
        for (double v : from) {
            double best = 1e300;
            for (double w : to) best = std::min(best, std::fabs(v - w));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(one_sided(predicted, observed), one_sided(observed, predicted));
}

}  // namespace

ThetaFit fit_theta_pattern(const SpectrumMultiset& observed, double dlt, int k) {
    if (dlt <= 0.0) throw InputError("fit_theta_pattern: delta must be positive");
    if (k < 0 || k > 4) throw InputError("fit_theta_pattern: k must be in [0, 4]");

    ThetaFit fit;
    fit.k = k;
    fit.delta = dlt;

    // Non-negative branch in quadruple units: zero carries the +/- pair of
    // quadruples, every positive cluster one quadruple per 4 eigenvalues.
    const double thr = observed.cluster_threshold;
    for (const auto& c : observed.clusters) {
        if (c.value < -thr) continue;
        const std::size_t copies =
            std::fabs(c.value) <= thr
                ? std::max<std::size_t>(1, c.multiplicity / 8)
                : std::max<std::size_t>(1, c.multiplicity / 4);
        for (std::size_t i = 0; i < copies; ++i)
            fit.observed_values.push_back(std::max(0.0, c.value));
    }
    std::sort(fit.observed_values.begin(), fit.observed_values.end());

    // a spectrum with no nonzero class (the division-algebra levels) matches
    // the empty pattern exactly
    const bool all_zero =
        std::all_of(fit.observed_values.begin(), fit.observed_values.end(),
                    [&](double v) { return v <= thr; });
    if (all_zero) {
        fit.thetas.assign(static_cast<std::size_t>(k), 0.0);
        fit.fitted_values.assign(fit.observed_values.size(), 0.0);
        fit.residual = 0.0;
        fit.structural_match = true;
        return fit;
    }

    if (k == 0) {
        fit.fitted_values = predicted_values(dlt, {});
        fit.residual = match_residual(fit.fitted_values, fit.observed_values);
        fit.structural_match = fit.residual <= kThetaFitRelTol * dlt * dlt;
        return fit;
    }

    auto objective = [&](const std::vector<double>& thetas) {
        return match_residual(predicted_values(dlt, thetas), fit.observed_values);
    };

    constexpr int kGrid = 512;  // per-angle scan resolution

    // refinement shared by every start: two rounds of per-angle 512-point
    // scans, then halving steps around the surviving point
    auto refine = [&](std::vector<double>& th) {
        for (int pass = 0; pass < 2; ++pass) {
            for (int j = 0; j < k; ++j) {
                auto& slot = th[static_cast<std::size_t>(j)];
                double local_best = slot;
                double local_res = objective(th);
                for (int g = 0; g <= kGrid; ++g) {
                    slot = kHalfPi * g / kGrid;
                    const double res = objective(th);
                    if (res < local_res) {
                        local_res = res;
                        local_best = slot;
                    }
                }
                slot = local_best;
            }
        }
        double width = kHalfPi / kGrid;
        for (int it = 0; it < 30; ++it) {
            for (int j = 0; j < k; ++j) {
                auto& slot = th[static_cast<std::size_t>(j)];
                const double center = slot;
                double pick = center;
                double pick_res = objective(th);
                for (double cand : {center - width, center + width}) {
                    if (cand < 0.0 || cand > kHalfPi) continue;
                    slot = cand;
                    const double res = objective(th);
                    if (res < pick_res) {
                        pick_res = res;
                        pick = cand;
                    }
                }
                slot = pick;
            }
            width *= 0.5;
        }
        return objective(th);
    };

    std::vector<double> best(static_cast<std::size_t>(k), 0.0);
    double best_res = objective(best);
    auto consider = [&](std::vector<double> th) {
        const double res = refine(th);
        if (res < best_res) {
            best_res = res;
            best = std::move(th);
        }
    };

    // joint coarse grid; resolution shrinks with k to keep the node count flat
    const int coarse = k == 1 ? kGrid : k == 2 ? 96 : k == 3 ? 28 : 12;
    std::vector<int> node(static_cast<std::size_t>(k), 0);
    std::vector<double> th(static_cast<std::size_t>(k));
    std::vector<double> grid_best = th;
    double grid_best_res = 1e300;
    while (true) {
        for (int j = 0; j < k; ++j)
            th[static_cast<std::size_t>(j)] =
                kHalfPi * node[static_cast<std::size_t>(j)] / coarse;
        const double res = objective(th);
        if (res < grid_best_res) {
            grid_best_res = res;
            grid_best = th;
        }
        int j = 0;
        while (j < k && ++node[static_cast<std::size_t>(j)] > coarse) {
            node[static_cast<std::size_t>(j)] = 0;
            ++j;
        }
        if (j == k) break;
    }
    consider(grid_best);

    // starts read off the observed values (every folded angle is a candidate)
    std::vector<double> candidates{0.0, kHalfPi / 2.0};
    for (double v : fit.observed_values)
        candidates.push_back(std::acos(std::clamp(v / dlt, 0.0, 1.0)));
    for (std::size_t a = 0; a < candidates.size(); ++a) {
        std::vector<double> start(static_cast<std::size_t>(k), candidates[a]);
        if (k == 2) {
            for (std::size_t b = 0; b < candidates.size(); ++b) {
                start[1] = candidates[b];
                consider(start);
            }
        } else {
            consider(start);
        }
    }

    fit.thetas = best;
    fit.fitted_values = predicted_values(dlt, best);
    fit.residual = best_res;
    fit.structural_match = fit.residual <= kThetaFitRelTol * dlt * dlt;
    return fit;
}

InclusionReport inclusion_check(int level, EntryMode mode, int trials,
                                std::uint64_t seed, double subset_tol) {
    if (trials < 1) throw InputError("inclusion_check: trials must be >= 1");
    if (level < 1 || level > kMaxLevel) throw InputError("inclusion_check: bad level");
    if (mode == EntryMode::Alternative && level < 4)
        throw InputError("inclusion_check: alternative mode needs level >= 4");

    InclusionReport report;
    report.level = level;
    report.mode = mode;
    report.trials = trials;
    report.seed = seed;
    report.expected_all_hold = mode == EntryMode::Alternative || level <= 4;

    for (int t = 0; t < trials; ++t) {
        const std::uint64_t sub_seed = mix_seed(seed, static_cast<std::uint64_t>(t));
        const CdElement x = mode == EntryMode::Alternative
                                ? make_alternative_entry_element(level, sub_seed)
                                : random_element(level, sub_seed);
        const auto [x1, x2] = split_element(x);
        const SpectrumMultiset sx = shifted_spectrum(x);
        InclusionTrial trial;
        trial.sub_seed = sub_seed;
        trial.entry1_included = multiset_subset(shifted_spectrum(x1), sx, subset_tol);
        trial.entry2_included = multiset_subset(shifted_spectrum(x2), sx, subset_tol);
        if (trial.holds())
            ++report.hold_count;
        else
            report.violation_trials.push_back(t);
        report.per_trial.push_back(trial);
    }
    report.as_expected = report.expected_all_hold
                             ? report.hold_count == trials
                             : !report.violation_trials.empty();
    return report;
}

DimensionReport dimension_obstruction(int plet_size, int level) {
    if (level < 0 || level > kMaxLevel) throw InputError("dimension_obstruction: bad level");
    DimensionReport r;
    r.plet_size = plet_size;
    r.level = level;
    r.algebra_dim = std::size_t{1} << level;
    r.distinct_value_count = expected_distinct_nonneg(level);
    r.match = r.distinct_value_count == static_cast<std::size_t>(plet_size);
    return r;
}

}  // namespace cdspectra
