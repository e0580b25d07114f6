#include <iostream>
#include <string>
#include <vector>

#include "cli_engine.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return humbert_cli::run_cli(args, std::cout, std::cerr);
}
