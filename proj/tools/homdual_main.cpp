#include <iostream>
#include <string>
#include <vector>

#include "homdual/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return homdual::cli::run(args, std::cout, std::cerr);
}
