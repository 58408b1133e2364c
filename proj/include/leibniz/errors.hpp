#pragma once

#include <stdexcept>
#include <string>

namespace leibniz {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};

// Raised instead of silently truncating an enumeration.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IdentityFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace leibniz
