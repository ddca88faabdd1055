#include "weaktile/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return weaktile::cli::run(argc, argv, std::cout, std::cerr);
}
