#include <iostream>

#include "totval/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return totval::cli::run(args, std::cout, std::cerr);
}
