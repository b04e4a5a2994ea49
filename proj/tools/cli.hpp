#pragma once

#include <iosfwd>

namespace mban::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitSolves = 0;
inline constexpr int kExitNotSolver = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `mban` tool: gen, verify, evolve, enumerate, stats.
/// Documents go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mban::cli
