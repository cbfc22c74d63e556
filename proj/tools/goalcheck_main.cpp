#include <iostream>

#include "goalcheck/cli.hpp"

int main(int argc, char** argv) { return goalcheck::run_cli(argc, argv, std::cout, std::cerr); }
