#pragma once

#include <string>
#include <vector>

namespace gkm {

struct CliResult {
  int exit_code = 0;  // 0 ok, 2 usage, 3 resource cap, 4 verification failure
  std::string out;
  std::string err;
};

// The whole command-line surface as a library call, so tests can drive it
// in-process; the gkmcalc binary is a thin wrapper.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace gkm
