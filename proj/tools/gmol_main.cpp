#include <iostream>

#include "gmol/cli.hpp"

int main(int argc, char** argv) {
    return gmol::cli::run(argc, argv, std::cout, std::cerr);
}
