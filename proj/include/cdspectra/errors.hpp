#pragma once

#include <stdexcept>

namespace cdspectra {

/// Bad caller input: wrong coordinate counts, mismatched levels, malformed
/// data files. Maps to CLI exit code 2.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An internal consistency bound was violated (signals a bug in the
/// arithmetic, not bad input). Maps to CLI exit code 3.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

/// The eigensolver failed to converge within its sweep budget.
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A randomized search exhausted its attempt budget.
struct GenerationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cdspectra
