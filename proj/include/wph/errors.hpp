#pragma once

#include <stdexcept>
#include <string>

namespace wph {

/// Input outside the documented domain of an operation (zero where a
/// nonzero value is required, mismatched lengths, non-integral tuples).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Specialization of DomainError for the all-zero tuple, which has no
/// weighted-projective meaning.
class ZeroTupleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Coordinate sequence and weight system differ in length.
class LengthMismatchError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Raised when a composite cofactor survives the configured factoring
/// effort. Never replaced by a guess.
class FactorizationIncomplete : public std::runtime_error {
 public:
  explicit FactorizationIncomplete(const std::string& cofactor)
      : std::runtime_error("composite cofactor " + cofactor +
                           " exceeds the configured factoring effort"),
        cofactor_(cofactor) {}

  const std::string& cofactor() const noexcept { return cofactor_; }

 private:
  std::string cofactor_;
};

/// Malformed textual number, tuple or bound.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace wph
