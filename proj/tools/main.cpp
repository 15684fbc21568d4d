#include <iostream>
#include <string>
#include <vector>

#include "wilson/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wilson::cli::run(args, std::cout, std::cerr);
}
