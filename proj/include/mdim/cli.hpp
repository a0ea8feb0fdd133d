#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mdim::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvalidInput = 2,
  kCapExceeded = 3,
  kClaimViolation = 4,
};

/// Runs one command line (args excludes the program name) and returns the
/// process exit code. All output goes to `out` and `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mdim::cli
