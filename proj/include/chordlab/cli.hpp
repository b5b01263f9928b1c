#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chordlab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Normal output
/// goes to `out` unless `--out` names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace chordlab
