#include <iostream>

#include "leibhom/cli.hpp"

int main(int argc, char** argv) { return leibhom::cli::run(argc, argv, std::cout, std::cerr); }
