#include <iostream>

#include "ncsieve/cli.hpp"

int main(int argc, char** argv) { return ncsieve::cli::main(argc, argv, std::cout, std::cerr); }
