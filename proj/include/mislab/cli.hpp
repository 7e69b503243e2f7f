#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mislab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitViolation = 3;
inline constexpr int kExitMismatch = 4;

/// Runs the command line `args` (without the program name). Artifacts and
/// reports go to `out` unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mislab
