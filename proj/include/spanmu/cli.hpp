#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spanmu {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kParse = 2;
inline constexpr int kDisconnected = 3;
inline constexpr int kMismatch = 4;
inline constexpr int kOverflow = 5;
} // namespace exit_code

/// Runs the command line `args` (without the program name) and returns the
/// process exit code. Output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace spanmu
