#include <iostream>

#include "bessel_cli/cli.hpp"

int main(int argc, char** argv) { return bessel::cli::run(argc, argv, std::cout, std::cerr); }
