// Acceptance suite: runs the full reproduction check table and prints one
// pass/fail line per check. Exits nonzero if anything fails.

#include <cstring>
#include <iostream>

#include "steerlab/verify.hpp"

int main(int argc, char** argv) {
    steerlab::VerifyOptions options;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
            options.only = argv[++i];
        }
    }
    const auto results = steerlab::run_verification(options);
    const int passed = steerlab::print_verification(std::cout, results);
    return passed == static_cast<int>(results.size()) ? 0 : 1;
}
