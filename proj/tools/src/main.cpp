#include <iostream>

#include "bbs_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bbs::cli::run(args, std::cout, std::cerr);
}
