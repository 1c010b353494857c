#include <iostream>

#include "uptilt/cli.hpp"

int main(int argc, char** argv) { return uptilt::cli::run(argc, argv, std::cout, std::cerr); }
