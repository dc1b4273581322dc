#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return flagcert::tools::run(argc, argv, std::cout, std::cerr); }
