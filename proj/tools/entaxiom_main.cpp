#include <iostream>

#include "entaxiom/cli.hpp"

int main(int argc, char** argv) {
  return entaxiom::run_cli(argc, argv, std::cout, std::cerr);
}
