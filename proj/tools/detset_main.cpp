#include <iostream>

#include "detset/cli.hpp"

int main(int argc, char** argv) { return detset::run_cli(argc, argv, std::cout, std::cerr); }
