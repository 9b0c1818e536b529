#pragma once

#include <stdexcept>
#include <string>

namespace amalgam {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size cap would be exceeded.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Tables that fail the commutative-ring axioms.
class InvalidRing : public Error {
 public:
  using Error::Error;
};

class InvalidHom : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A law that must hold on every finite carrier was observed to fail. This is
/// a defect in the library, never a property of the input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

inline void enforce(bool cond, const std::string& what) {
  if (!cond) throw InvariantViolation(what);
}

}  // namespace amalgam
