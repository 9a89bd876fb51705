#include <iostream>

#include "prophet_gap/cli.hpp"

int main(int argc, char **argv) {
  return prophet_gap::run_cli(argc, argv, std::cout, std::cerr);
}
