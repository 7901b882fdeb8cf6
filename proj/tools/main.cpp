#include <iostream>

#include "icegt/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return icegt::run_cli(args, std::cout, std::cerr);
}
