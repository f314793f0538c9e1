#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coupon::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kResourceCap = 3,
};

/// Runs one command line (args exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coupon::cli
