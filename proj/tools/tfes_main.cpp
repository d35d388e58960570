#include <iostream>
#include <vector>

#include "tfes/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return tfes::run(args, std::cout, std::cerr);
}
