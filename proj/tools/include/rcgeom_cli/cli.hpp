#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rc::cli {

/// Exit statuses of the command-line front end.
enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kDegenerate = 3,  // typed mathematical degeneracy or inconsistency
  kInternal = 4,    // invariant breach
};

/// Seed resolution: RC_SEED (when set) overrides both the --seed flag
/// and the default 0xC0FFEE.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag);

/// Runs one command. The result JSON (or the serialized error) goes to
/// `out` unless --out names a file; CLI usage text goes to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rc::cli
