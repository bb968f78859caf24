#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hnlab::cli {

/// Exit statuses of the hnlab command line tool.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDomain = 2,
  kMismatch = 3,
};

/// Runs one hnlab invocation. `args` excludes the program name. Exactly one
/// report goes to `out`; timings and help text go to `err` and `out`
/// respectively.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hnlab::cli
