#include <iostream>

#include "loghankel/cli.hpp"

int main(int argc, char** argv) { return loghankel::cli::run_cli(argc, argv, std::cout, std::cerr); }
