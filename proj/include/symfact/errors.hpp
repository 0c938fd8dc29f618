#ifndef SYMFACT_ERRORS_HPP
#define SYMFACT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symfact {

/// Shape mismatch between operands (arity, matrix size, partition length).
struct StructuralError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Exact division left a nonzero remainder.
struct NotDivisible : std::domain_error {
  using std::domain_error::domain_error;
};

/// Input to a symmetric-only operation is not symmetric.
struct NotSymmetric : std::domain_error {
  using std::domain_error::domain_error;
};

/// Two routes that must agree did not, or an internal identity failed.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

/// Quadrature domain or convergence problem.
struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace symfact

#endif  // SYMFACT_ERRORS_HPP
