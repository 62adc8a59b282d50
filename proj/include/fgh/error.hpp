#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fgh {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error {
 public:
  DegreeMismatch(std::size_t lhs, std::size_t rhs)
      : Error("degree mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

class InvalidPermutation : public Error {
 public:
  using Error::Error;
};

/// Closure grew past the configured order cap; `partial_order` is the number
/// of elements enumerated when the cap was hit.
class OrderCapExceeded : public Error {
 public:
  OrderCapExceeded(std::size_t cap, std::size_t partial_order)
      : Error("group order exceeds cap " + std::to_string(cap) + " (enumerated " +
              std::to_string(partial_order) + " elements)"),
        cap_(cap),
        partial_order_(partial_order) {}

  std::size_t cap() const noexcept { return cap_; }
  std::size_t partial_order() const noexcept { return partial_order_; }

 private:
  std::size_t cap_;
  std::size_t partial_order_;
};

class LatticeCapExceeded : public Error {
 public:
  LatticeCapExceeded(std::size_t order, std::size_t cap)
      : Error("group order " + std::to_string(order) + " exceeds lattice cap " +
              std::to_string(cap)) {}
};

class NotNormal : public Error {
 public:
  using Error::Error;
};

class NotSubgroup : public Error {
 public:
  using Error::Error;
};

class EmptyStructure : public Error {
 public:
  using Error::Error;
};

class DegenerateFactor : public Error {
 public:
  using Error::Error;
};

class InvalidPrime : public Error {
 public:
  explicit InvalidPrime(std::size_t p) : Error("not a prime: " + std::to_string(p)) {}
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class StepBudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Syntax error in a group file or functorial expression. `position` is a
/// 1-based line number for files and a 1-based column for expressions.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(what + " (at " + std::to_string(position) + ")"), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownTheorem : public Error {
 public:
  explicit UnknownTheorem(const std::string& id) : Error("unknown theorem id: " + id) {}
};

}  // namespace fgh
