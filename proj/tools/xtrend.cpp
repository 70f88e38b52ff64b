#include <iostream>

#include "xtrend/cli.hpp"

int main(int argc, char** argv) { return xtrend::cli::run(argc, argv, std::cout, std::cerr); }
