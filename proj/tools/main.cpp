#include <iostream>
#include <vector>

#include "lingame/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lingame::run_command(args, std::cout, std::cerr);
}
