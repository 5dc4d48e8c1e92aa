#include <monoquad/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return monoquad::cli::run_cli(argc, argv, std::cout, std::cerr); }
