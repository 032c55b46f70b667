#include <iostream>

#include "lshape/cli/run.hpp"

int main(int argc, char** argv) { return lshape::cli::run(argc, argv, std::cout, std::cerr); }
