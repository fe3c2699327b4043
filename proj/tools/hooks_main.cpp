#include <iostream>
#include <string>
#include <vector>

#include "hooks/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return hooks::cli::run(args, std::cout, std::cerr);
}
