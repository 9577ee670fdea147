#include <iostream>

#include "nalg/cli.hpp"

int main(int argc, char **argv) { return nalg::run_cli(argc, argv, std::cout, std::cerr); }
