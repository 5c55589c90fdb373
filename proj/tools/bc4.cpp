#include <iostream>

#include "bc4_cli.hpp"

int main(int argc, char** argv) { return bc4::cli::run(argc, argv, std::cout, std::cerr); }
