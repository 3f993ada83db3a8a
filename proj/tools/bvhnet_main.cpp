#include <iostream>
#include <string>
#include <vector>

#include "bvhnet/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return bvhnet::cli::run(args, std::cout, std::cerr);
}
