#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "primform/poly.hpp"

namespace primform {

/// Integer form of a rational weight system: deg x_i = w_i / unit, with
/// unit the lcm of the weight denominators. z has scaled degree `unit`.
struct Grading {
  long unit = 1;
  std::vector<long> w;

  long degree(const Monomial& m) const;
  Rational to_rational(long scaled) const { return Rational(scaled, unit); }
};

/// f with weights q_i such that f(l^q x) = l f(x) and 0 < q_i <= 1/2.
class WeightedPolynomial {
 public:
  /// Throws Rejection when the weights are out of range or some term of
  /// `poly` does not have weighted degree exactly 1.
  WeightedPolynomial(std::vector<std::string> variables, std::vector<Rational> weights, Poly poly);

  std::size_t nvars() const { return variables_.size(); }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<Rational>& weights() const { return weights_; }
  const Poly& poly() const { return poly_; }
  const Grading& grading() const { return grading_; }

  Rational degree(const Monomial& m) const { return grading_.to_rational(grading_.degree(m)); }
  std::string str() const { return poly_.str(variables_); }

 private:
  std::vector<std::string> variables_;
  std::vector<Rational> weights_;
  Poly poly_;
  Grading grading_;
};

/// Sum of (1 - 2 q_i).
Rational central_charge(const WeightedPolynomial& f);

/// Product of (1/q_i - 1): the Milnor number of an isolated quasi-homogeneous
/// singularity with these weights.
Rational expected_milnor_number(const std::vector<Rational>& weights);

/// Unique weights making every term of `poly` degree 1, if they exist.
std::optional<std::vector<Rational>> infer_weights(const Poly& poly);

}  // namespace primform
