#include <iostream>

#include "zcp/cli.hpp"

int main(int argc, char** argv) {
    return zcp::run_cli(argc, argv, std::cout, std::cerr);
}
