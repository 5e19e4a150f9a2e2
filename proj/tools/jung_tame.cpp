#include <iostream>

#include "jung/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return jung::cli::run(args, std::cout, std::cerr);
}
