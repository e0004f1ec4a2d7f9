#include <iostream>

#include "su2est/cli.hpp"

int main(int argc, char** argv) { return su2est::run_cli(argc, argv, std::cout, std::cerr); }
