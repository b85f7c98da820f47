#include <iostream>
#include <string>
#include <vector>

#include "grlie/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return grlie::run_cli(args, std::cout, std::cerr);
}
