#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include "ruledcent/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    ruledcent::cli::Context ctx;
    ctx.color = std::getenv("RULEDCENT_NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
    return ruledcent::cli::run(args, std::cout, std::cerr, ctx);
}
