#include <iostream>

#include "aslab/cli.hpp"

int main(int argc, char** argv) {
  return aslab::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
