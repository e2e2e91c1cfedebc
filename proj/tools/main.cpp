#include <iostream>

#include "modtriple/app/commands.hpp"

int main(int argc, char** argv) { return modtriple::run_cli(argc, argv, std::cout, std::cerr); }
