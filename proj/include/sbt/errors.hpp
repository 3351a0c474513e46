#pragma once

#include <stdexcept>

namespace sbt {

/// Raised when an operation would divide by an identically zero quantity.
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed textual input (scalars, words, partitions).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed input that violates a size or index constraint.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace sbt
