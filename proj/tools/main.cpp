#include <iostream>

#include "qubound/cli.hpp"

int main(int argc, char** argv) { return qubound::run_cli(argc, argv, std::cout, std::cerr); }
