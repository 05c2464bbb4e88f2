#include "monocurve/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return monocurve::cli::main(argc, argv, std::cout, std::cerr); }
