#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hbloch {

/// Exit codes: 0 success, 1 failed checks or estimation error, 2 usage error,
/// 3 output file could not be written.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/// Runs the command line (arguments without the program name). Reports go to
/// `out` unless --output names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hbloch
