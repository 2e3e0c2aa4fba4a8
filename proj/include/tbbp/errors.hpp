#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tbbp {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid mathematical input (division by zero, negative sqrt, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Text that does not conform to a grammar. Carries the offending offset.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Formulas of mismatched (degree, base, length) fed to a shape-sensitive op.
class ShapeError : public Error {
public:
  using Error::Error;
};

/// Digit extraction could not certify its output (carry ambiguity).
class IndeterminateError : public Error {
public:
  using Error::Error;
};

}  // namespace tbbp
