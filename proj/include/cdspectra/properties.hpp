#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cdspectra/element.hpp"

namespace cdspectra {

/// Default relative residual below which an identity is considered to hold.
/// Double precision through at most eight doubling levels loses well under
/// six digits, so 1e-10 leaves a wide margin.
inline constexpr double kIdentityTol = 1e-10;

/// Residual a stored counterexample must exceed to count as a failure witness.
inline constexpr double kWitnessThreshold = 1e-6;

enum class Identity {
    SelfConjugate,  // x == conj(x)
    Commutative,    // [x, y] == 0
    Associative,    // [x, y, z] == 0
    Alternative,    // [x, x, y] == 0
    Flexible,       // [x, y, x] == 0
};

const char* identity_name(Identity id);

/// Highest level at which the identity holds (flexibility holds everywhere).
std::optional<int> identity_max_level(Identity id);

struct IdentityResult {
    Identity identity{};
    bool holds = false;
    double max_residual = 0.0;
    /// Witness triple (flattened coordinates) recorded on the first failure;
    /// re-evaluating it must reproduce a residual above kWitnessThreshold.
    std::optional<std::vector<CdElement>> witness;
    double witness_residual = 0.0;
};

struct PropertyReport {
    int level = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<IdentityResult> results;

    const IdentityResult& result(Identity id) const;
};

/// Scaled residual of one identity on a sample (residual / (1 + product of
/// operand norms)).
double identity_residual(Identity id, const CdElement& x, const CdElement& y,
                         const CdElement& z);

/// Samples `trials` random tuples at the given level and evaluates all five
/// Table-style identities, recording the worst residual and a failure witness
/// where one exists.
PropertyReport property_report(int level, int trials, std::uint64_t seed,
                               double tol = kIdentityTol);

}  // namespace cdspectra
