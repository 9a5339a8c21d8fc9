#include <vector>

#include "chromasift/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return chromasift::run_cli(args);
}
