#include <iostream>

#include "spanbound/cli/commands.hpp"

int main(int argc, char** argv) { return spanbound::cli::run_cli(argc, argv, std::cout, std::cerr); }
