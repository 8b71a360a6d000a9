#include <iostream>

#include "trigsum/cli.hpp"

int main(int argc, char** argv) {
  return trigsum::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
