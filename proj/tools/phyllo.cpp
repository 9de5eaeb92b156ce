#include <iostream>

#include "phyllo/cli.hpp"

int main(int argc, char** argv) { return phyllo::run_cli(argc, argv, std::cout, std::cerr); }
