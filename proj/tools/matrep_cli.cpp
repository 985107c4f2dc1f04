#include <iostream>

#include "matrep/app/commands.hpp"

int main(int argc, char **argv) {
  return matrep::app::run_cli(argc, argv, std::cout, std::cerr);
}
