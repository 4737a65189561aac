#pragma once

#include <stdexcept>

namespace krall {

/// Division by zero or a non-invertible element.
struct ArithmeticError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Operands live in different contexts (different surds, different b).
struct ContextError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Argument outside the domain of an operation (e.g. not in U_b).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// A parameter value the library does not handle (b = 0).
struct UnsupportedParameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Two construction routes that must agree did not.
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

/// A shift-operator coefficient has a pole at the requested index.
struct EvaluationError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Bad contour or sample-grid geometry in the numeric layer.
struct GeometryError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace krall
