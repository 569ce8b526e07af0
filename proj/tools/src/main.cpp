#include <iostream>

#include "copgeo_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return copgeo::cli::run(args, std::cout, std::cerr);
}
