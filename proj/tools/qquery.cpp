#include <iostream>

#include "qquery/cli.hpp"

int main(int argc, char** argv) { return qquery::run_cli(argc, argv, std::cout, std::cerr); }
