#include <iostream>

#include "bocalc/cli.hpp"

int main(int argc, char** argv) { return bocalc::cli::run(argc, argv, std::cout, std::cerr); }
