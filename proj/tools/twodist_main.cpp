#include <iostream>
#include <string>
#include <vector>

#include "twodist/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return twodist::cli::dispatch(args, std::cout, std::cerr);
}
