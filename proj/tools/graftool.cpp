#include <iostream>

#include "grafts/cli.hpp"

int main(int argc, char** argv) { return grafts::run_cli(argc, argv, std::cout, std::cerr); }
