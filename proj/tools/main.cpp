#include <iostream>
#include <string>
#include <vector>

#include "mmc/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return mmc::run_cli(args, std::cout, std::cerr);
}
