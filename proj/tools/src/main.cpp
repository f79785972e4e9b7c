#include <iostream>

#include "octic_cli/cli.hpp"

int main(int argc, char** argv) {
  return octic::cli::main_entry(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
