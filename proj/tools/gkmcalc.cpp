#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  gkm::CliResult result = gkm::run_cli(args);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
