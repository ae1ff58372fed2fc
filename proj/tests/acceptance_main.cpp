// Runs the verification suite and prints one line per criterion.
// Usage: acceptance_tests [seed [threads]]

#include <cstdlib>
#include <iostream>

#include "hermdens/acceptance.hpp"

int main(int argc, char** argv)
{
    unsigned long seed = 20260818;
    int threads = 0;
    if (argc > 1) seed = std::strtoul(argv[1], nullptr, 10);
    if (argc > 2) threads = static_cast<int>(std::strtol(argv[2], nullptr, 10));

    auto results = hermdens::acceptance::run_all(seed, threads);
    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << " (" << r.detail
                  << ")\n";
        all = all && r.passed;
    }
    std::cout << (all ? "all criteria passed" : "CRITERIA FAILED") << "\n";
    return all ? 0 : 1;
}
