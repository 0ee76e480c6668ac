#include <iostream>
#include <string>
#include <vector>

#include "cliff_tools/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cliff::tools::run(args, std::cout, std::cerr);
}
