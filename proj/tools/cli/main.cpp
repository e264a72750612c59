#include <iostream>
#include <string>
#include <vector>

#include "uecsm_cli/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return uecsm::cli::run(args, std::cin, std::cout, std::cerr);
}
