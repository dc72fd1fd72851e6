#include <iostream>
#include <string>
#include <vector>

#include "hcl/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hcl::dispatch(args, std::cout, std::cerr);
}
