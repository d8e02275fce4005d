#include <iostream>
#include <string>
#include <vector>

#include "skewcm/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return skewcm::cli::run(args, std::cout, std::cerr);
}
