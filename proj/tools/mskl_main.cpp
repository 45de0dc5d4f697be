#include <iostream>

#include "mskl/cli.hpp"

int main(int argc, char** argv) { return mskl::run_cli(argc, argv, std::cout, std::cerr); }
