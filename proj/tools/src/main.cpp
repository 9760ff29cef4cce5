#include <iostream>

#include "sympres_cli/cli.hpp"

int main(int argc, char **argv) { return sympres::cli::run_cli(argc, argv, std::cout, std::cerr); }
