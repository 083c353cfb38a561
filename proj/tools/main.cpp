#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return amalgenus::cli::main_from_args(argc, argv, std::cout, std::cerr);
}
