#include <iostream>

#include "flagmn/cli.hpp"

int main(int argc, char** argv) { return flagmn::cli::run(argc, argv, std::cout, std::cerr); }
