#include <iostream>

#include "gravloc/cli.hpp"

int main(int argc, char** argv) {
  return gravloc::run_cli(argc, argv, std::cout, std::cerr);
}
