#include <iostream>

#include "hgl/cli.hpp"

int main(int argc, char** argv) { return hgl::cli::run(argc, argv, std::cout, std::cerr); }
