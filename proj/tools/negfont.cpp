#include <iostream>
#include <string>
#include <vector>

#include "negfont/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return negfont::run_cli(args, std::cout, std::cerr);
}
