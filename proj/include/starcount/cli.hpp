#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace starcount::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,           // I/O and anything unexpected
  kParseError = 2,        // malformed edge list or CSV
  kInvalidArgument = 3,   // bad parameter, violated generator constraint, empty input
  kRatioViolation = 4,    // degree ratio outside the assumed bound
  kUsage = 64,            // bad command line
};

// Runs the `starcount` command line. Output goes to `out` (or --out),
// diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace starcount::cli
