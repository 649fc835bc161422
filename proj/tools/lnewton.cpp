#include <iostream>

#include "lnewton/cli.hpp"

int main(int argc, char** argv) { return lnewton::run_cli(argc, argv, std::cout, std::cerr); }
