#include <iostream>

#include "pointed/cli.hpp"

int main(int argc, char** argv) { return pointed::cli::run(argc, argv, std::cout); }
