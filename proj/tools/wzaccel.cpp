#include <iostream>

#include "wzaccel/cli.hpp"

int main(int argc, char** argv) { return wzaccel::cli_main(argc, argv, std::cout, std::cerr); }
