#include <iostream>

#include "dpfib/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dpfib::run_cli(args, std::cout, std::cerr);
}
