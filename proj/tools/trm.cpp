#include <iostream>

#include "trm/cli.hpp"

int main(int argc, char** argv) { return trm::run_cli(argc, argv, std::cout, std::cerr); }
