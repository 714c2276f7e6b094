#include <iostream>
#include <string>
#include <vector>

#include "l0path/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return l0path::cli::run(args, std::cin, std::cout, std::cerr);
}
