#include <iostream>
#include <string>
#include <vector>

#include "cantor/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return cantor::cli::run(args, std::cout, std::cerr);
}
