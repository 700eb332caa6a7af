#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  scarf_cli::RunConfig config;
  if (auto code = scarf_cli::parse(argc, argv, config, std::cout, std::cerr)) return *code;
  return scarf_cli::run(config, std::cout, std::cerr);
}
