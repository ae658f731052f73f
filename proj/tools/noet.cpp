#include <iostream>
#include <vector>

#include "noet/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return noet::cli_run(args, std::cout, std::cerr);
}
