#include <iostream>
#include <string>
#include <vector>

#include "asymada/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return asymada::run_cli(args, std::cout, std::cerr);
}
