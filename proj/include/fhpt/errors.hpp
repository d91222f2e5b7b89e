#pragma once

#include <stdexcept>
#include <string>

namespace fhpt {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Result not representable in double precision.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Evaluation at a pole of the potential.
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Quadrature sampled a non-finite integrand value.
class IntegrandError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fhpt
