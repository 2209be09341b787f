#include <iostream>

#include "permdek/cli.hpp"

int main(int argc, char** argv) {
  permdek::configure_logging();
  return permdek::run_cli(argc, argv, std::cout, std::cerr);
}
