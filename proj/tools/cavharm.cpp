#include <iostream>
#include <string>
#include <vector>

#include "cavharm/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return cavharm::cli::run(args, std::cout, std::cerr);
}
