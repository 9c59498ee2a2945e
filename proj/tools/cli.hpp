#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace h3sep::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kNoBoundState = 3,
  kValidationFailure = 4,
};

/// Runs the command line `args` (args[0] is the program name). Results go to
/// `out` unless an output file is requested; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace h3sep::cli
