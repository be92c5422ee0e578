#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ortho::cli {

enum ExitCode : int {
  kOk = 0,
  kFalse = 1,
  kInvalid = 2,
  kNumerical = 3,
};

/// Entry point shared by the `ortho` binary and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ortho::cli
