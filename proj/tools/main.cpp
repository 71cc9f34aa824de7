#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return covalg::cli::run(argc, argv, std::cout, std::cerr);
}
