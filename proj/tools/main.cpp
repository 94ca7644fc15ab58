#include <iostream>
#include <string>
#include <vector>

#include "coxstar/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return coxstar::run_cli(args, std::cout, std::cerr);
}
