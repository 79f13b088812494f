#include <iostream>
#include <string>
#include <vector>

#include "tiltcube/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tiltcube::run(args, std::cout, std::cerr);
}
