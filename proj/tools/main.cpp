#include <iostream>
#include <string>
#include <vector>

#include "mincodes/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return mincodes::cli::run(args, std::cin, std::cout, std::cerr);
}
