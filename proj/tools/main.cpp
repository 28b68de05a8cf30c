#include <iostream>

#include "braket_cli.hpp"

int main(int argc, char** argv) { return braket::cli::run_cli(argc, argv, std::cout, std::cerr); }
