#include <iostream>

#include "twinsieve/cli.hpp"

int main(int argc, char** argv) { return twinsieve::cli::run(argc, argv, std::cout, std::cerr); }
