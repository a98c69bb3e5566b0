#include <iostream>

#include "hcrep/cli/cli.hpp"

int main(int argc, char** argv) { return hcrep::cli::run(argc, argv, std::cout, std::cerr); }
