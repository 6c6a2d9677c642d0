#include <iostream>

#include "chpm/cli.hpp"

int main(int argc, char** argv) { return chpm::cli::run(argc, argv, std::cout, std::cerr); }
