#include <iostream>
#include <string>
#include <vector>

#include "scsim/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return scsim::cli::run(std::move(args), std::cin, std::cout, std::cerr);
}
