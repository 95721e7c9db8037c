#pragma once

#include <stdexcept>
#include <string>

namespace torus {

/// Caller violated a precondition (mismatched alphabets, zero evaluation point, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A result failed an internal consistency assertion (e.g. constant term not +1
/// after normalization). Carries a human-readable diagnostic.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The per-k normalization monomial of a knot family is not geometric in k.
class CalibrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace torus
