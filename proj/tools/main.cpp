#include "coreduce/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return coreduce::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
