#include <iostream>

#include "cvd/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cvd::run_command(args, std::cout, std::cerr);
}
