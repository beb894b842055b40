#include "acceptance/acceptance.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
    unsigned long seed = unipart::acceptance::kDefaultSeed;
    if (argc > 1) {
        try {
            seed = std::stoul(argv[1]);
        } catch (const std::exception&) {
            std::cerr << "usage: " << argv[0] << " [seed]\n";
            return 2;
        }
    }
    auto results = unipart::acceptance::run_all(seed, &std::cout);
    int failed = unipart::acceptance::summarize(results, std::cout);
    return failed == 0 ? 0 : 1;
}
