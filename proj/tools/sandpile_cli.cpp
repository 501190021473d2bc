#include <iostream>

#include "sandpile/cli.hpp"

int main(int argc, char** argv) { return sandpile::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
