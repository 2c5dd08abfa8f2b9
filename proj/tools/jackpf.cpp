#include <iostream>

#include "jackpf/cli.hpp"

int main(int argc, char** argv) { return jackpf::run_cli(argc, argv, std::cout, std::cerr); }
