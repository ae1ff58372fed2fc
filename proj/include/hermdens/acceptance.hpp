#pragma once

#include <string>
#include <vector>

namespace hermdens::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // check count, or count of failures with the first one spelled out
};

// The full verification suite: every exact identity the library promises,
// swept over its documented ranges.  `seed` drives the randomized Hilbert
// product checks; `threads` is forwarded to the enumeration oracle.
std::vector<CriterionResult> run_all(unsigned long seed = 20260818, int threads = 0);

}  // namespace hermdens::acceptance
