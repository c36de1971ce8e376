#include <iostream>
#include <string>
#include <vector>

#include "zdlat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return zdlat::cli::run(args, std::cout, std::cerr);
}
