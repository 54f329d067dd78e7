#pragma once

#include <stdexcept>
#include <string>

namespace bwbverify {

/// A caller handed in a value outside an operation's domain (bad index,
/// non-dominant weight, malformed literal, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed. Always a bug or corrupt input data,
/// never a recoverable user error.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace bwbverify
