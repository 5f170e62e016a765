#include <iostream>
#include <string>
#include <vector>

#include "latdisp/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return latdisp::cli_main(args, std::cout, std::cerr);
}
