#include <iostream>

#include "toricgm/commands.hpp"

int main(int argc, char** argv) { return toricgm::run_cli(argc, argv, std::cout, std::cerr); }
