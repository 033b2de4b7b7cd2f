#include <iostream>

#include "reasm/cli.hpp"

int main(int argc, char** argv) { return reasm::run_cli(argc, argv, std::cout, std::cerr); }
