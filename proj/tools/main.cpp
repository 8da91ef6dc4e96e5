#include <iostream>

#include "heiscat_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return heiscat::cli::run_subcommand(args, std::cout, std::cerr);
}
