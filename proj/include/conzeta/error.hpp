#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace conzeta {

/// Caller supplied something outside an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text input; carries the 1-based line number.
class ParseError : public InvalidInput {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InvalidInput("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A mathematical identity that must hold did not. Signals a bug, not bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An exhaustive enumeration would exceed its budget.
class ResourceLimit : public std::runtime_error {
 public:
  ResourceLimit(const std::string& what, std::size_t requested)
      : std::runtime_error(what + " (would enumerate " + std::to_string(requested) + ")"),
        requested_(requested) {}
  std::size_t requested() const noexcept { return requested_; }

 private:
  std::size_t requested_;
};

/// Argument too close to a pole of a special function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The integral representations of the limiting zeta function disagree.
class CrossValidationError : public std::runtime_error {
 public:
  CrossValidationError(const std::string& what, std::vector<double> values)
      : std::runtime_error(what), values_(std::move(values)) {}
  const std::vector<double>& values() const noexcept { return values_; }

 private:
  std::vector<double> values_;
};

}  // namespace conzeta
