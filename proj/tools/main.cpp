#include "semideal/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return semideal::cli::run_command(argc, argv, std::cout, std::cerr); }
