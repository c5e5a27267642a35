#include <iostream>

#include "deltakit/cli.hpp"

int main(int argc, char** argv) {
    return deltakit::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
