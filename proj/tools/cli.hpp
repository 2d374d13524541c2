#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rootlab::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kCollision = 3,
  kInconclusive = 4,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rootlab::cli
