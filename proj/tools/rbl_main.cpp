#include <iostream>
#include <string>
#include <vector>

#include "rbl/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rbl::cli::run(args, std::cout, std::cerr);
}
