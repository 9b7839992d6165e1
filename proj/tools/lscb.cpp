#include <iostream>

#include "lscb/cli/commands.hpp"

int main(int argc, char** argv) { return lscb::cli::run(argc, argv, std::cout, std::cerr); }
