#pragma once

#include <stdexcept>
#include <string>

namespace mdslab {

// Raised when an operation is mathematically undefined for its input:
// division by zero, singular matrices, zero entries where a unit is
// required, failed lift conditions. Distinct from std::invalid_argument,
// which covers malformed parameters (bad degree, unsupported order, ...).
class MathDomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace mdslab
