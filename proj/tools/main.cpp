#include <iostream>

#include "mlbalance/cli.hpp"

int main(int argc, char** argv) {
    return mlbalance::cli::run(argc, argv, std::cout, std::cerr);
}
