#pragma once

#include <stdexcept>
#include <string>

namespace dqdc {

// Shape or length mismatch between operands.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operand outside the mathematical domain of an operation
// (Hadamard inverse of a zero entry, log of a negative entry, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Pivot collapse in the linear solver.
class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Time integration produced a non-finite state or overflowed its step budget.
class IntegrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dqdc
