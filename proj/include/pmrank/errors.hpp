#pragma once

#include <stdexcept>
#include <string>

namespace pmrank {

// Raised when a caller violates an operation's input contract.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised by the correlation metrics when the coefficient is undefined
// (fewer than two items, or one side is constant).
class UndefinedCorrelation : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace pmrank
