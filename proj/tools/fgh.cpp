#include <iostream>
#include <string>
#include <vector>

#include "fgh/lab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fgh::lab::run(args, std::cout, std::cerr);
}
