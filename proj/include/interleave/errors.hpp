#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "interleave/numeric.hpp"

namespace interleave {

/// Malformed process term. `position` is a 0-based character offset.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// An explicit expansion would exceed its node budget.
class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded(const std::string& what, BigInt predicted)
      : std::runtime_error(what + " (predicted " + predicted.get_str() + ")"),
        predicted_(std::move(predicted)) {}
  const BigInt& predicted() const { return predicted_; }

private:
  BigInt predicted_;
};

/// A run prefix that is not admissible for its tree. `index` is 0-based.
class InvalidPrefix : public std::invalid_argument {
public:
  InvalidPrefix(std::size_t index, const std::string& what)
      : std::invalid_argument("invalid run prefix at position " + std::to_string(index) + ": " + what),
        index_(index) {}
  std::size_t index() const { return index_; }

private:
  std::size_t index_;
};

/// A sequence that violates the degree-sequence rules. `index` is 0-based.
class InvalidDegreeSequence : public std::invalid_argument {
public:
  InvalidDegreeSequence(std::size_t index, const std::string& what)
      : std::invalid_argument("invalid degree sequence at index " + std::to_string(index) + ": " + what),
        index_(index) {}
  std::size_t index() const { return index_; }

private:
  std::size_t index_;
};

}  // namespace interleave
