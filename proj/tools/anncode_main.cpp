#include <iostream>

#include "anncode/cli.hpp"

int main(int argc, char** argv) { return anncode::cli::run(argc, argv, std::cout, std::cerr); }
