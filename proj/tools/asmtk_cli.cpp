#include "asmtk/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return asmtk::run_cli(argc, argv, std::cout, std::cerr); }
