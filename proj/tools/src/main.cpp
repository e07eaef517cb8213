#include <iostream>

#include "fte_cli/cli.hpp"

int main(int argc, char** argv) { return fte::cli::run(argc, argv, std::cout, std::cerr); }
