#pragma once

#include <stdexcept>
#include <string>

namespace hermdens {

// Violated input contract.  The CLI maps this to exit code 2.
struct precondition_error : std::domain_error {
    explicit precondition_error(const std::string& what) : std::domain_error(what) {}
};

// Requested enumeration larger than the configured ceiling.  Exit code 3.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// A division that must be exact left a remainder.  This is an internal
// consistency failure (a transcribed formula is wrong), not an input error.
struct inexact_division_error : std::logic_error {
    explicit inexact_division_error(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw precondition_error(msg);
}

// Always-on consistency assertion (not compiled out in release builds).
inline void internal_check(bool cond, const std::string& msg) {
    if (!cond) throw std::logic_error("internal check failed: " + msg);
}

}  // namespace hermdens
