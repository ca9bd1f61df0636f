#include <iostream>

#include <holderkit/cli.hpp>

int main(int argc, char** argv) {
    const holderkit::CommandOutcome outcome =
        holderkit::run_cli(std::vector<std::string>(argv + 1, argv + argc));
    std::cout << outcome.payload;
    std::cerr << outcome.diagnostics;
    return outcome.exit_code;
}
