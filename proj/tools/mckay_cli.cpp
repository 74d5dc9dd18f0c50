#include "mckay/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return mckay::run_cli(std::move(args));
}
