#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace biheyt::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kBudget = 3,
  kInconclusive = 4,
};

// Runs the command line `args` (without the program name), writing results
// to out and diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace biheyt::cli
