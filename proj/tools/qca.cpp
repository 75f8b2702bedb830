#include <iostream>

#include "qca/cli.hpp"

int main(int argc, char** argv) { return qca::run_cli(argc, argv, std::cout, std::cerr); }
