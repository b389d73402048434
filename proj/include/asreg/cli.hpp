#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace asreg::cli {

enum ExitCode : int {
  kTrue = 0,
  kFalse = 1,
  kUsage = 2,
  kUndecided = 3,
};

/// Runs one command line (without the program name). JSON goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace asreg::cli
