#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "primform/terms.hpp"

namespace primform {

/// Exact multivariate polynomial with rational coefficients.
class Poly {
 public:
  explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}
  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly monomial(const Monomial& m, const Rational& c = Rational(1));

  std::size_t nvars() const { return nvars_; }
  const detail::TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly operator-() const { return *this * Rational(-1); }

  /// Exact product; throws ContractViolation on variable-count mismatch.
  friend Poly operator*(const Poly& a, const Poly& b);

  Poly derivative(std::size_t var) const;

  /// Terms rendered highest graded-lex first, e.g. "x^3 + 1/2*y^7".
  std::string str(std::span<const std::string> names) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t nvars_;
  detail::TermMap terms_;
};

Poly poly_mul(const Poly& a, const Poly& b);

/// Determinant of a square matrix of polynomials (Laplace expansion; n is tiny).
Poly determinant(const std::vector<std::vector<Poly>>& m);

}  // namespace primform
