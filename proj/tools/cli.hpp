#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nacoh::cli {

enum ExitStatus : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kInfeasible = 3,
  kNontrivial = 10,
};

// Parses `args` (without the program name) and runs the subcommand.
// Machine-readable output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nacoh::cli
