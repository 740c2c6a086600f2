#include <iostream>

#include "stirsum/cli.hpp"

int main(int argc, char** argv) {
    return stirsum::cli::run(argc, argv, std::cout, std::cerr);
}
