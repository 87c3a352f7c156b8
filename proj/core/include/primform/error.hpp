#pragma once

#include <stdexcept>
#include <string>

namespace primform {

/// A caller broke a documented precondition (mismatched variable counts,
/// out-of-range indices, and so on).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Input data that is well formed but mathematically unusable: weights that
/// do not make the polynomial homogeneous, a non-isolated singularity, a
/// user basis that is not a basis of the Jacobian algebra.
class Rejection : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal identity failed. Always a bug or a convention mismatch.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text or JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace primform
