#pragma once

#include <stdexcept>
#include <string>

namespace egz {

/// Malformed caller input: bad modulus, wrong sequence length, zero difference.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A solver invariant failed. On valid input this always indicates a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Modular inverse requested for a non-unit.
class NotInvertible : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace egz
