#include <iostream>
#include <string>
#include <vector>

#include "radix2/cli/commands.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return radix2::cli::run(args, std::cout, std::cerr);
}
