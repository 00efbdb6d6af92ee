#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prodbasis::cli {

enum ExitCode : int {
  kOk = 0,
  kFalse = 1,
  kPrecondition = 2,
  kCompletionFailed = 3,
  kBudgetExceeded = 4,
  kParseError = 5,
};

/// Runs one invocation; args excludes the program name. Reads "-" inputs from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace prodbasis::cli
