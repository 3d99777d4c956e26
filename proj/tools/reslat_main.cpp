#include <iostream>
#include <string>
#include <vector>

#include "reslat/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return reslat::cli::run(args, std::cout, std::cerr);
}
