#pragma once

#include <string>
#include <vector>

namespace subdepth::cli {

struct Result {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Exit codes: 0 success, 1 violated theorem assertion or internal failure,
/// 2 user error. `args` excludes the program name.
Result run(const std::vector<std::string>& args);

}  // namespace subdepth::cli
