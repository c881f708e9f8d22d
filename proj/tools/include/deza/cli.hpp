#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace deza::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kDiscrepancy = 2,
  kInvariant = 3,
};

/// Runs the command line `args` (without the program name) against the
/// given streams and returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace deza::cli
