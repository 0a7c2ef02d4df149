#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hexiso::cli {

enum ExitCode : int {
  kOk = 0,
  kViolations = 1,
  kUsage = 2,       // usage, argument or domain error
  kResource = 3,    // resource guard or non-termination diagnostic
};

// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hexiso::cli
