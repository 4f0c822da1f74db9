#include <iostream>

#include "judicious/harness.hpp"

int main(int argc, char** argv) {
  return judicious::run_cli(argc, argv, std::cout, std::cerr);
}
