#include <iostream>

#include "subdiv/cli.hpp"

int main(int argc, char** argv) {
  return subdiv::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
