#include <iostream>
#include <vector>

#include "torusact/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return torusact::cli::run(args, std::cout, std::cerr);
}
