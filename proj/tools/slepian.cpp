#include <iostream>

#include "slepian/cli.hpp"

int main(int argc, char** argv) { return slepian::cli::run(argc, argv, std::cout, std::cerr); }
