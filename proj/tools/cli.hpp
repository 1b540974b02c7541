#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace steiner::cli {

enum ExitCode : int {
  ok = 0,
  failed = 1,       // checked and the property does not hold
  usage_error = 2,  // bad arguments, unreadable or invalid input
  inconsistent = 3  // deciders that must agree did not
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace steiner::cli
