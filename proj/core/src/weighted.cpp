#include "primform/weighted.hpp"

#include <numeric>

#include "primform/error.hpp"
#include "primform/matrix.hpp"

namespace primform {

long Grading::degree(const Monomial& m) const {
  if (m.size() != w.size()) throw ContractViolation("Grading: variable-count mismatch");
  long d = 0;
  for (std::size_t i = 0; i < w.size(); ++i) d += static_cast<long>(m[i]) * w[i];
  return d;
}

WeightedPolynomial::WeightedPolynomial(std::vector<std::string> variables, std::vector<Rational> weights,
                                       Poly poly)
    : variables_(std::move(variables)), weights_(std::move(weights)), poly_(std::move(poly)) {
  if (variables_.size() != weights_.size() || poly_.nvars() != variables_.size())
    throw ContractViolation("WeightedPolynomial: variables, weights and polynomial disagree in size");
  if (poly_.is_zero()) throw Rejection("polynomial is zero");
  const Rational half(1, 2);
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i].sign() <= 0 || weights_[i] > half)
      throw Rejection("weight of " + variables_[i] + " is " + weights_[i].str() + ", outside (0, 1/2]");
  }
  long unit = 1;
  for (const auto& q : weights_) unit = std::lcm(unit, q.denominator_i64());
  grading_.unit = unit;
  for (const auto& q : weights_) grading_.w.push_back(q.numerator_i64() * (unit / q.denominator_i64()));

  for (const auto& [m, c] : poly_.terms()) {
    if (grading_.degree(m) != unit)
      throw Rejection("term " + m.str(variables_) + " has weighted degree " + degree(m).str() +
                      ", not 1; weights are inconsistent with the polynomial");
  }
}

Rational central_charge(const WeightedPolynomial& f) {
  Rational c(0);
  for (const auto& q : f.weights()) c += Rational(1) - Rational(2) * q;
  return c;
}

Rational expected_milnor_number(const std::vector<Rational>& weights) {
  Rational mu(1);
  for (const auto& q : weights) mu *= Rational(1) / q - Rational(1);
  return mu;
}

std::optional<std::vector<Rational>> infer_weights(const Poly& poly) {
  const std::size_t n = poly.nvars();
  Matrix a(poly.size(), n);
  std::vector<Rational> ones(poly.size(), Rational(1));
  std::size_t r = 0;
  for (const auto& [m, c] : poly.terms()) {
    for (std::size_t i = 0; i < n; ++i) a(r, i) = Rational(m[i]);
    ++r;
  }
  return solve_unique(a, ones);
}

}  // namespace primform
