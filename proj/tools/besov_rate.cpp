#include <iostream>

#include "besov/cli.hpp"

int main(int argc, char** argv) {
  return besov::cliMain({argv + 1, argv + argc}, std::cout, std::cerr);
}
