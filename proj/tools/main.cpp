#include <iostream>

#include "ogroup/frontend/cli.hpp"

int main(int argc, char **argv) {
  return ogroup::frontend::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
