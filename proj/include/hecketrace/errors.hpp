#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hecketrace {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (type strings, words, Hecke expressions).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Well-formed input that violates a precondition (index out of range, mixed data, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The requested group (or cache) is larger than the configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Operation only implemented for a subset of Cartan types.
class UnsupportedType : public Error {
 public:
  using Error::Error;
};

/// Division by zero or an exactness requirement that failed (odd exponents, remainders).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A proven identity failed to hold. Always an implementation bug; carries a counterexample dump.
class TheoremViolation : public Error {
 public:
  TheoremViolation(const std::string& claim, const std::string& counterexample)
      : Error("theorem violated: " + claim + "; counterexample: " + counterexample),
        claim_(claim),
        counterexample_(counterexample) {}

  const std::string& claim() const noexcept { return claim_; }
  const std::string& counterexample() const noexcept { return counterexample_; }

 private:
  std::string claim_;
  std::string counterexample_;
};

}  // namespace hecketrace
