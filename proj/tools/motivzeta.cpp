#include <iostream>

#include "motivzeta/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return motivzeta::cli::run(args, std::cout, std::cerr);
}
