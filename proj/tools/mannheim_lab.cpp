#include <iostream>

#include "mannheim/cli.hpp"

int main(int argc, char** argv) { return mannheim::cli::run(argc, argv, std::cout, std::cerr); }
