#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphicable::cli {

enum ExitCode : int {
  kSuccess = 0,
  kPropertyFails = 1,
  kUsageError = 2,
  kResourceBound = 3,
};

/// Runs one CLI invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graphicable::cli
