#include "okb/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return okb::run_cli(argc, argv, std::cout, std::cerr); }
