#include <iostream>
#include <string>
#include <vector>

#include "liecx/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return liecx::cli_run(args, std::cout, std::cerr);
}
