#include <iostream>

#include "bigcp/cli.hpp"

int main(int argc, char** argv) { return bigcp::run_cli(argc, argv, std::cout, std::cerr); }
