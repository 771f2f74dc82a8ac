#pragma once

#include <stdexcept>
#include <string>

namespace lokern {

/// Invalid argument or parameter outside its admissible range.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A point does not lie on the domain it was used with.
class MembershipError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested degree exceeds what an evaluator or quadrature was built for.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Weight evaluated on its singular set.
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested scale is finer than the discretization can resolve.
class ResolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical construction (positive cubature, frame level) could not be certified.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Objects that must belong together (frame/coefficients) do not match.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lokern
