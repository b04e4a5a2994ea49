#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mban {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Configuration and network sizes disagree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input outside the problem's domain (even n for DCT, n above a supported bound).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A construction or command parameter violates its precondition.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A computation needs more work than the caller allowed.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, std::uint64_t required)
      : Error(what), required_(required) {}

  /// Lower bound on the budget that would have been needed.
  std::uint64_t required() const noexcept { return required_; }

 private:
  std::uint64_t required_;
};

/// Malformed text input; `what()` carries the location.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace mban
