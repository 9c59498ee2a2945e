#pragma once

#include <stdexcept>
#include <string>

namespace h3sep {

/// Raised when an argument lies outside the domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// No sign change of the requested secular factor was found on the scan interval.
class NoBoundState : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical quadrature did not reach its requested accuracy.
class QuadratureFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed solution does not satisfy the equations it was built from.
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace h3sep
