#pragma once

#include <stdexcept>
#include <string>

namespace nctorus {

/// Malformed or invariant-violating input (non-skew matrix, bad rational, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed its configured size bound.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lattice operation whose preconditions fail (non-containment, infinite index).
class LatticeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace nctorus
