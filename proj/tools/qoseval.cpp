#include "qoseval/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return qoseval::run_cli(argc, argv, std::cout, std::cerr); }
