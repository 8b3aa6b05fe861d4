#include <iostream>
#include <string>
#include <vector>

#include "hbloch/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hbloch::run_cli(args, std::cout, std::cerr);
}
