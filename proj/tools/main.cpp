#include <iostream>
#include <string>
#include <vector>

#include "mlc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mlc::run(args, std::cout, std::cerr);
}
