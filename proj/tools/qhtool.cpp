#include "qh/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return qh::cli::run(argc, argv, std::cout, std::cerr); }
