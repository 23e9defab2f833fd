#include <iostream>

#include "wmc/cli.hpp"

int main(int argc, char** argv) { return wmc::cli::main_entry(argc, argv, std::cout, std::cerr); }
