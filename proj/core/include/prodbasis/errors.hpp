#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace prodbasis {

/// Operands live in different fields.
class FieldMismatch : public std::invalid_argument {
 public:
  explicit FieldMismatch(const std::string& what) : std::invalid_argument(what) {}
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

class SingularMatrix : public std::domain_error {
 public:
  SingularMatrix() : std::domain_error("singular matrix") {}
};

/// Raised when a field has no finite element list (the rationals).
class NotEnumerable : public std::domain_error {
 public:
  explicit NotEnumerable(const std::string& field)
      : std::domain_error("field " + field + " is not enumerable") {}
};

/// A precondition on the field order that the construction relies on is not met.
class FieldTooSmall : public std::domain_error {
 public:
  explicit FieldTooSmall(const std::string& what)
      : std::domain_error("field too small (no guarantee): " + what) {}
};

/// The randomized completion search ran out of candidates.
class CompletionNotFound : public std::runtime_error {
 public:
  explicit CompletionNotFound(std::uint64_t trials)
      : std::runtime_error("completion not found after " + std::to_string(trials) + " trials"),
        trials_(trials) {}
  std::uint64_t trials() const noexcept { return trials_; }

 private:
  std::uint64_t trials_;
};

/// An exhaustive enumeration would visit more objects than allowed.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget)
      : std::runtime_error("enumeration budget exceeded: need " + std::to_string(required) +
                           ", budget " + std::to_string(budget)),
        required_(required) {}
  std::uint64_t required() const noexcept { return required_; }

 private:
  std::uint64_t required_;
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error("parse error: " + what) {}
};

}  // namespace prodbasis
