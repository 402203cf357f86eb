#include <iostream>

#include "invcurve/cli/cli.hpp"

int main(int argc, char** argv) {
  return invcurve::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
