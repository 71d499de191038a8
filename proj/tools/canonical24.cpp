#include "canonical24/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return canonical24::run_cli(argc, argv, std::cout, std::cerr);
}
