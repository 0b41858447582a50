#include <iostream>
#include <string>
#include <vector>

#include "hypo/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return hypo::run(args, std::cout, std::cerr);
}
