#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clsum {

/// A brute-force or sweep operation was asked to exceed its hard size limit.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// E(s - 1/2) has a coefficient of the wrong parity, so E cannot be the
/// Ehrhart polynomial of a reflexive polytope.
class SymmetryViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DegreeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotCL : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A facet of the input polytope is not at lattice distance one from the origin.
class NonReflexive : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace clsum
