#include "rosel/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return rosel::cli::main_entry(argc, argv, std::cout, std::cerr);
}
