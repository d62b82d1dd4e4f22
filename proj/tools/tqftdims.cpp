#include <iostream>

#include "tqft/cli.hpp"

int main(int argc, char** argv) {
    return tqft::run_cli(argc, argv, std::cout, std::cerr);
}
