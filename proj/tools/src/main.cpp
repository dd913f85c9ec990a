#include <iostream>

#include "combid/cli/cli.hpp"

int main(int argc, char** argv) { return combid::cli::run(argc, argv, std::cout, std::cerr); }
