#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace primform {

/// Exponent vector over a fixed, ordered set of variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps);
  Monomial(std::initializer_list<int> exps) : Monomial(std::vector<int>(exps)) {}

  /// x_i^power in `nvars` variables.
  static Monomial variable(std::size_t nvars, std::size_t i, int power = 1);

  std::size_t size() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  std::span<const int> exponents() const { return exps_; }
  int total_degree() const { return total_; }
  bool is_one() const { return total_ == 0; }

  /// Throws ContractViolation when variable counts differ.
  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// this / o; requires o.divides(*this).
  Monomial quotient(const Monomial& o) const;
  /// Exponent i lowered by one; requires exps[i] > 0.
  Monomial lowered(std::size_t i) const;
  Monomial raised(std::size_t i, int by = 1) const;

  /// "x^2*y" style rendering; "1" for the empty monomial.
  std::string str(std::span<const std::string> names) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<int> exps_;
  int total_ = 0;
};

/// Graded-lexicographic order: total degree first, then lexicographic with
/// the first variable most significant (so x > y > z in degree 1).
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Default variable names for n variables: x,y,z for n <= 3, else x1..xn.
std::vector<std::string> default_variable_names(std::size_t n);

/// Names t1..tn used for flat coordinates and unfolding parameters.
std::vector<std::string> indexed_names(const std::string& stem, std::size_t n);

}  // namespace primform
