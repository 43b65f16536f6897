#include <iostream>

#include "plbranch/cli.hpp"

int main(int argc, char** argv) { return plbranch::run(argc, argv, std::cout, std::cerr); }
