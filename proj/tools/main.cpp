#include <iostream>

#include "hermdens/cli.hpp"

int main(int argc, char** argv)
{
    return hermdens::cli::run_cli(argc, argv, std::cout, std::cerr);
}
