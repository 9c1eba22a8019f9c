#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mlsp::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // anything not covered below
  kExitUsage = 2,    // bad flags, unknown source, invalid alpha/beta
  kExitInput = 3,    // unreadable or malformed edge list
  kExitGuard = 4,    // size guard refused the computation
};

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mlsp::cli
