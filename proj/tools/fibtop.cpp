#include "fibtop/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return fibtop::run_cli(argc, argv, std::cout, std::cerr); }
