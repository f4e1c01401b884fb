#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sigfrust::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kBudgetExceeded = 3,
};

// Runs one command line (without the program name). Output goes to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sigfrust::cli
