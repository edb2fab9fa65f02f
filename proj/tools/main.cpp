#include <iostream>
#include <string>
#include <vector>

#include "quadnorm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return quadnorm::cli_main(args, std::cout, std::cerr);
}
