#include "multicat/cli.hpp"
#include <iostream>
#include <vector>
#include <string>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mcat::run_cli(std::move(args), std::cout, std::cerr);
}
