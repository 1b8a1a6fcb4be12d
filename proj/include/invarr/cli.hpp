#pragma once

#include <ostream>
#include <span>
#include <string>

namespace invarr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;

// Subcommands: stats, interval, poincare, sweep, oracle-check. `args`
// excludes the program name. Reports go to `out` (or --output), diagnostics
// to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace invarr::cli
