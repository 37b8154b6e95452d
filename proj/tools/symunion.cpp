#include <iostream>
#include <string>
#include <vector>

#include "symknot/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return symknot::cli_run(args, std::cout, std::cerr);
}
