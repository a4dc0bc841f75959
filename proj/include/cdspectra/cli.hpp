#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "cdspectra/spectral.hpp"
#include "cdspectra/structure.hpp"

namespace cdspectra {

/// Exit codes shared by the CLI and the command layer.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInternalError = 3;

struct CommandResult {
    nlohmann::json report;
    int exit_code = kExitOk;
    std::string summary;  // single-line human text for stderr
};

/// Signed basis multiplication table of the algebra (level <= 4).
CommandResult cmd_table(int level);

/// Identity ladder report over random samples.
CommandResult cmd_props(int level, int trials, std::uint64_t seed);

/// Shifted spectrum, degeneracy profile and (alternative mode) cos-sum fit of
/// one seeded element. Alternative mode resamples until the spectrum is
/// generic and reports the resample count.
CommandResult cmd_spectrum(int level, std::uint64_t seed, EntryMode mode,
                           double cluster_tol = kDefaultClusterTol);

/// Spectrum inclusion trials (entries vs the doubled element).
CommandResult cmd_inclusion(int level, EntryMode mode, int trials, std::uint64_t seed,
                            double subset_tol = kDefaultClusterTol);

/// Multiplet size vs the number of distinct eigenvalue classes.
CommandResult cmd_dimension(int plet_size, int level);

/// Mass relations over a meson data file. `which` is one of
/// formula16 | gmo | burakovsky | vector | all. Exit code 0 means every
/// evaluated relation produced its expected verdict (the vector analogue is
/// expected to fail; that expectation makes tension the passing outcome).
CommandResult cmd_mass(const std::string& data_path, const std::string& which,
                       double z = 2.0);

}  // namespace cdspectra
