#include <iostream>

#include "pulsesmith/cli.hpp"

int main(int argc, char** argv) { return pulsesmith::cli::run(argc, argv, std::cout, std::cerr); }
