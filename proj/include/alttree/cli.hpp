#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace alttree::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,          // bad arguments or unparsable input
  kInvalidObject = 3,  // parsed, but not alternating / not a valid tree
};

/// Runs the command line `args` (without the program name). Input that is not
/// given as arguments is read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace alttree::cli
