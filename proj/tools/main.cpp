#include "logalg/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return logalg::run_cli(argc, argv, std::cout, std::cerr); }
