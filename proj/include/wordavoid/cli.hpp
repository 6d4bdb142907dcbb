#ifndef WORDAVOID_CLI_HPP
#define WORDAVOID_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace wordavoid::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kParseError = 2,
  kNotReduced = 3,
  kSingular = 4,
  kBudgetExceeded = 5,
};

/// Runs one command line (without the program name) and returns the exit
/// code. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace wordavoid::cli

#endif  // WORDAVOID_CLI_HPP
