#include <iostream>

#include "taft/cli.hpp"

int main(int argc, char** argv) { return taft::cli::run(argc, argv, std::cout, std::cerr); }
