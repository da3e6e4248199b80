#include <iostream>
#include <string>
#include <vector>

#include "chebfib/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return chebfib::cli::run(std::move(args), std::cout, std::cerr);
}
