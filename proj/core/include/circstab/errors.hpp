#pragma once

#include <stdexcept>
#include <string>

namespace circstab {

// Invalid input data (asymmetric connection set, bad modulus, ...).
// The CLI maps this to exit code 2.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A bounded search (automorphism backtracking, displacement closure)
// exceeded its node budget. Never silently truncated. Exit code 4.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A mechanized theorem check failed. This is the falsification channel:
// it must never fire on inputs satisfying the theorem hypotheses.
// Exit code 3.
struct FalsificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace circstab
