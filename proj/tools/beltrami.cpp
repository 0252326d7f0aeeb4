#include "beltrami/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return beltrami::run_cli(argc, argv, std::cout, std::cerr); }
