#include <iostream>
#include <string>
#include <vector>

#include "basketchef/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return basketchef::run_cli(args, std::cout, std::cerr);
}
