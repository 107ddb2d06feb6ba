#include <iostream>
#include <string>
#include <vector>

#include "monorr/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return monorr::cli::run(args, std::cin, std::cout, std::cerr);
}
