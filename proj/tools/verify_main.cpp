#include <iostream>

#include "surfint/cli.hpp"

int main(int argc, char** argv) { return surfint::verify_main(argc, argv, std::cout, std::cerr); }
