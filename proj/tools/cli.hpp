#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace locham::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kResourceLimit = 3,
};

/// Entry point behind the `locham` executable. `args` excludes the program
/// name. Stdin is read from `in` when no input file or instance is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace locham::cli
