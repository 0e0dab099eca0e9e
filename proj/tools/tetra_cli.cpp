#include "tetra/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return tetra::cli::dispatch({argv + 1, argv + argc}, std::cout, std::cerr);
}
