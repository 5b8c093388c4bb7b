#include <iostream>

#include "faclab/cli/commands.hpp"

int main(int argc, char** argv) { return faclab::cli::run(argc, argv, std::cout, std::cerr); }
