#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace swm::cli {

enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kParseError = 2,
  kSingularSystem = 3,
  kCapExceeded = 4,
};

/// Environment variable that overrides the dense size cap.
inline constexpr const char* kMaxNDenseEnv = "SWM_MAX_N_DENSE";

/// Runs the command line `args` (args[0] is the program name) and returns
/// the process exit code. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace swm::cli
