#pragma once

#include <stdexcept>
#include <string>

namespace lcrg {

/// Argument outside the mathematical domain of an operation (negative
/// threshold, self-loop edge, non-positive rate, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Problem size beyond what an exact algorithm is allowed to attempt.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed or inconsistent experiment configuration. Raised before any
/// sampling takes place.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace lcrg
