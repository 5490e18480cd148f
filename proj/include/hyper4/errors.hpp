#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyper4 {

/// Malformed text input. `position` is 1-based; 0 when not applicable.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// The combinatorics or the group data are inconsistent with a manifold.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SelfPairingError : public StructuralError {
 public:
  using StructuralError::StructuralError;
};

/// Classification input that violates an arithmetic constraint.
class ImpossibleInvariants : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hyper4
