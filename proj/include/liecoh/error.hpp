#pragma once

#include <stdexcept>
#include <string>

namespace liecoh {

// Malformed or out-of-contract input: parse failures, failed validation,
// violated preconditions. Callers can recover; the CLI maps it to exit 1.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A fact that must hold mathematically did not. Always a bug, never bad input.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidInput(what);
}

inline void ensure(bool ok, const std::string& what) {
    if (!ok) throw ContractViolation(what);
}

} // namespace liecoh
