#include <iostream>
#include <string>
#include <vector>

#include "spanmu/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return spanmu::run_cli(args, std::cout, std::cerr);
}
