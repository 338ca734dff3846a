#include <iostream>

#include "psums/cli_app.hpp"

int main(int argc, char** argv) {
    return psums::run_cli(argc, argv, std::cout, std::cerr);
}
