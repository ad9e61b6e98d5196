#include <iostream>
#include <string>
#include <vector>

#include "inventory/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return inventory::run(args, std::cout, std::cerr);
}
