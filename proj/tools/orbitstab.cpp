#include <iostream>
#include <string>
#include <vector>

#include "orbitstab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return orbitstab::run(args, std::cout, std::cerr);
}
