#include "cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    std::string warning;
    const auto env = girthcut::cli::environment_from_process(&warning);
    if (!warning.empty()) {
        std::cerr << warning << '\n';
    }
    std::vector<std::string> args(argv + 1, argv + argc);
    return girthcut::cli::run(args, std::cout, std::cerr, env);
}
