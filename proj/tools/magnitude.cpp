#include <iostream>

#include "magnitude/cli.hpp"

int main(int argc, char** argv) { return magnitude::cli::run(argc, argv, std::cout, std::cerr); }
