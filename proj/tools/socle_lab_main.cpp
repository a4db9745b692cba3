#include <iostream>

#include "soclelab/cli.hpp"

int main(int argc, char** argv) { return soclelab::run_cli(argc, argv, std::cout, std::cerr); }
