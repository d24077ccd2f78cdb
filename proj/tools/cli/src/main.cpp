#include <iostream>
#include <string>
#include <vector>

#include "maxcut/cli/commands.hpp"

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return maxcut::cli::runCli(args, std::cout, std::cerr);
}
