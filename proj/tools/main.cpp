#include <iostream>
#include <string>
#include <vector>

#include "arrcoh/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return arrcoh::run_cli(args, std::cout, std::cerr);
}
