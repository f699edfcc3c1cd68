#pragma once

#include <stdexcept>
#include <string>

namespace spinqw {

// Raised when caller-supplied data violates an operation's stated precondition.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};

// Malformed or inconsistent request (unknown name, mixed exact and decimal inputs, ...).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what)
{
    if (!cond) throw PreconditionError(what);
}

} // namespace spinqw
