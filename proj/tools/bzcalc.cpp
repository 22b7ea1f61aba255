#include <iostream>

#include "dcb/cli.hpp"

int main(int argc, char** argv) { return dcb::run_cli(argc, argv, std::cout, std::cerr); }
