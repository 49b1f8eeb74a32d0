#include <iostream>
#include <string>
#include <vector>

#include "catstat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return catstat::cli::run(args, std::cout, std::cerr);
}
