#include <iostream>

#include "frobcoh_cli/commands.hpp"

int main(int argc, char** argv) { return frobcoh::cli::run_command(argc, argv, std::cout, std::cerr); }
