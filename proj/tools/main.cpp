#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return causal_bgk::cli::run(argc, argv, std::cout, std::cerr); }
