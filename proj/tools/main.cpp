#include <iostream>
#include <string>
#include <vector>

#include "bmssp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bmssp::run_cli(args, std::cout, std::cerr);
}
