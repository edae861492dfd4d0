#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace loopkit::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifiedFalse = 1, // a property, condition or audit came out false
  kUsageError = 2,    // bad flags or malformed input files
  kResourceError = 3, // size caps, numerical failures
};

inline constexpr std::uint64_t kDefaultSeed = 1;

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Cocycle seed of trial t in `audit`.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial);

} // namespace loopkit::cli
