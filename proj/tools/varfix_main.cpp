#include "varfix/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return varfix::run_cli(argc, argv, std::cout, std::cerr);
}
