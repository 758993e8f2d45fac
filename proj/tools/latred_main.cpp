#include <iostream>
#include <string>
#include <vector>

#include "latred/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return latred::run_command(args, std::cout, std::cerr);
}
