#include <iostream>

#include "sepdisc_cli/commands.hpp"

int main(int argc, char** argv) {
  return sepdisc::cli::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
