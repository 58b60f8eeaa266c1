#include <iostream>

#include "unicyclic/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return unicyclic::run_cli(args, std::cout, std::cerr);
}
