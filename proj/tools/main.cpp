#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return apolar::cli::run_cli(argc, argv, std::cout, std::cerr); }
