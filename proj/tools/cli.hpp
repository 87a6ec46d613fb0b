#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace demkit::cli {

/// Exit codes shared by every subcommand.
enum Exit : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kDisconnected = 3,
  kBudgetExceeded = 4,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace demkit::cli
