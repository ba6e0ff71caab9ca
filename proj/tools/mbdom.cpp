#include <iostream>
#include <vector>

#include "mbd/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return mbd::run_command(args, std::cout, std::cerr);
}
