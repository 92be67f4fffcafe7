#include <iostream>
#include <string>
#include <vector>

#include "arstat/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return arstat::cli_main(args, std::cout, std::cerr);
}
