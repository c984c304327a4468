#include <iostream>

#include "trigvar/cli.hpp"

int main(int argc, char** argv) { return trigvar::cli::main(argc, argv, std::cout, std::cerr); }
