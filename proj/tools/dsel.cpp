#include <iostream>
#include <string>
#include <vector>

#include "dsel/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dsel::cli::run(args, std::cout, std::cerr);
}
