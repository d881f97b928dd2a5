#include <iostream>

#include "curvefree/cli.hpp"

int main(int argc, char** argv) { return curvefree::cli::run(argc, argv, std::cout, std::cerr); }
