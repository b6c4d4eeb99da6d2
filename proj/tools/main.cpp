#include <iostream>

#include "dtr/cli/app.hpp"

int main(int argc, char** argv) { return dtr::cli::run(argc, argv, std::cout, std::cerr); }
