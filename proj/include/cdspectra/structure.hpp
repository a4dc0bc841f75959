#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cdspectra/element.hpp"
#include "cdspectra/spectral.hpp"

namespace cdspectra {

/// Twice the norm of the cross product of the two entries' imaginary parts:
/// 2 sqrt(|x1|^2 |x2|^2 - <x1, x2>^2) over the imaginary parts. Sets the scale
/// of the nonzero shifted eigenvalues. Requires level >= 1; a radicand more
/// negative than rounding allows is an internal error.
double delta(const CdElement& x);

/// Splits x = (x1, x2) into its doubling entries one level down.
std::pair<CdElement, CdElement> split_element(const CdElement& x);
CdElement join_entries(const CdElement& x1, const CdElement& x2);

/// Element of A_level whose two entries both pass is_alternative in the level
/// below. Entries are sampled from three families and verified by the
/// predicate, resampling on failure (at most 1000 attempts per entry):
///   (a) a random octonion placed in one aligned 8-coordinate block,
///   (b) a real part plus one such block,
///   (c) a twisted chain: a span{1,u} line element pushed up through the
///       doubling as U = (s V, beta + t V); these reach the generic spectra
///       the block families cannot.
CdElement make_alternative_entry_element(int level, std::uint64_t seed,
                                         double predicate_tol = 1e-10);

struct DegeneracyProfile {
    int level = 0;
    bool is_even_spectrum = false;  // clusters symmetric under negation
    int quadruple_count = 0;        // clusters of multiplicity exactly 4
    int distinct_nonneg = 0;        // clusters with value >= -threshold
    double max_pairing_residual = 0.0;
};

DegeneracyProfile profile_from_multiset(const SpectrumMultiset& s, int level);

/// Shifted-spectrum degeneracy profile of x.
DegeneracyProfile degeneracy_profile(const CdElement& x,
                                     double cluster_tol = kDefaultClusterTol);

/// Expected number of distinct non-negative shifted eigenvalues for a generic
/// alternative-entry element: 2^(level-3) (a single zero below the sedenions).
std::size_t expected_distinct_nonneg(int level);

/// An alternative-entry draw resampled until its spectrum is generic: the
/// distinct non-negative count is 2^(level-3) and all cluster gaps exceed
/// ten clustering thresholds.
struct GenericDraw {
    CdElement element{};
    SpectrumMultiset spectrum;
    DegeneracyProfile profile;
    int resamples = 0;
};

GenericDraw make_generic_alternative_draw(int level, std::uint64_t seed,
                                          double cluster_tol = kDefaultClusterTol,
                                          int max_resamples = 50);

/// Result of fitting the nested sign-pattern family
///   { delta * |cos(s_j th_j + ... + s_1 th_1)| : s in {+-1}^j, j = 0..k } u {0}
/// to the non-negative branch of an observed spectrum. A fit with residual
/// <= 1e-6 * delta^2 is declared a structural match; anything else is a
/// no-fit result, not an error.
struct ThetaFit {
    int k = 0;
    double delta = 0.0;
    std::vector<double> thetas;         // k angles in [0, pi/2]
    std::vector<double> fitted_values;  // predicted non-negative multiset, sorted
    std::vector<double> observed_values;
    double residual = 0.0;
    bool structural_match = false;
};

inline constexpr double kThetaFitRelTol = 1e-6;  // of delta^2

ThetaFit fit_theta_pattern(const SpectrumMultiset& observed, double delta, int k);

enum class EntryMode { Alternative, Generic };

struct InclusionTrial {
    std::uint64_t sub_seed = 0;
    bool entry1_included = false;
    bool entry2_included = false;
    bool holds() const { return entry1_included && entry2_included; }
};

struct InclusionReport {
    int level = 0;
    EntryMode mode = EntryMode::Alternative;
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<InclusionTrial> per_trial;
    int hold_count = 0;
    std::vector<int> violation_trials;
    bool expected_all_hold = false;  // from mode and level
    bool as_expected = false;
};

/// For each trial builds x = (x1, x2) per mode and checks the spectrum of each
/// entry (one level down) against the spectrum of x, values only. Alternative
/// entries must always be included; generic draws at level >= 5 are expected
/// to produce at least one violation.
InclusionReport inclusion_check(int level, EntryMode mode, int trials,
                                std::uint64_t seed,
                                double subset_tol = kDefaultClusterTol);

struct DimensionReport {
    int plet_size = 0;
    int level = 0;
    std::size_t algebra_dim = 0;
    std::size_t distinct_value_count = 0;  // 2^(level-3)
    bool match = false;
};

/// Compares a multiplet size against the number of distinct non-negative
/// eigenvalue classes the algebra at this level can offer.
DimensionReport dimension_obstruction(int plet_size, int level);

}  // namespace cdspectra
