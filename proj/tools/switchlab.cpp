#include <iostream>
#include <string>
#include <vector>

#include "switchlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return switchlab::cli::main(args, std::cout);
}
