#include "schroederlab/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return schroederlab::cli::run(argc, argv, std::cout, std::cerr); }
