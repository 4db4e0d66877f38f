#include "sykspike/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return sykspike::cli::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
