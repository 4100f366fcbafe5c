#include <iostream>
#include <string>
#include <vector>

#include "sdf/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return sdf::cli::run(args, std::cout, std::cerr);
}
