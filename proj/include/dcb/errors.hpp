#pragma once

#include <stdexcept>
#include <string>

namespace dcb {

// Precondition violated by the caller (bad index lists, negative factorial...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An identity that must hold by construction did not (non-divisible U(m,n),
// broken triangularity). Always a bug, never a user error.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed text input (multisegment, Laurent polynomial, weight lists).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace dcb
