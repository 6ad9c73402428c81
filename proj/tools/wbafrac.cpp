#include <iostream>

#include "wbafrac/cli.hpp"

int main(int argc, char** argv) { return wbafrac::cli::run(argc, argv, std::cout, std::cerr); }
