#pragma once

#include <stdexcept>

namespace swishart {

// Raised when a truncated series (or an iteration built on one) cannot
// deliver the requested accuracy within its budget. Distinct from
// std::invalid_argument, which covers precondition violations.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace swishart
