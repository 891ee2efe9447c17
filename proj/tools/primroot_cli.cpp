#include <iostream>
#include <string>
#include <vector>

#include "primroot/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return primroot::cli::run(args, std::cout, std::cerr);
}
