#include <iostream>

#include "pade_cli/cli.hpp"

int main(int argc, char** argv) { return hyperlab::cli::run(argc, argv, std::cout, std::cerr); }
