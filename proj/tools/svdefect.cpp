#include <iostream>

#include "sv/cli.hpp"

int main(int argc, char** argv) {
    return sv::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
