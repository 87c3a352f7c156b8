#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "primform/terms.hpp"

namespace primform {

/// Truncated power series in parameters s_1..s_n: every stored term has
/// total degree <= order, and products drop anything beyond it.
class SSeries {
 public:
  SSeries() = default;
  SSeries(std::size_t nparams, int order);
  static SSeries constant(std::size_t nparams, int order, const Rational& c);
  /// s_i as a series.
  static SSeries variable(std::size_t nparams, int order, std::size_t i);
  static SSeries monomial(const Monomial& m, int order, const Rational& c = Rational(1));

  std::size_t nparams() const { return nparams_; }
  int order() const { return order_; }
  const detail::TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Monomial& m) const;

  /// Adds c*m; silently ignored when deg m exceeds the truncation order.
  void add_term(const Monomial& m, const Rational& c);

  SSeries& operator+=(const SSeries& o);
  SSeries& operator-=(const SSeries& o);
  SSeries& operator*=(const Rational& c);
  friend SSeries operator+(SSeries a, const SSeries& b) { return a += b; }
  friend SSeries operator-(SSeries a, const SSeries& b) { return a -= b; }
  friend SSeries operator*(SSeries a, const Rational& c) { return a *= c; }
  friend SSeries operator*(const Rational& c, SSeries a) { return a *= c; }
  SSeries operator-() const { return *this * Rational(-1); }
  /// Product at the smaller of the two truncation orders.
  friend SSeries operator*(const SSeries& a, const SSeries& b);

  /// Adds c * a * b into this series (truncated at this->order()).
  void add_product(const SSeries& a, const SSeries& b, const Rational& c = Rational(1));

  SSeries truncated(int order) const;
  /// Total-degree-k slice, keeping this series' order.
  SSeries homogeneous_part(int k) const;
  SSeries derivative(std::size_t param) const;
  /// Lowest total degree present; -1 for the zero series.
  int lowest_degree() const;

  std::string str(std::span<const std::string> names) const;

  friend bool operator==(const SSeries& a, const SSeries& b) {
    return a.nparams_ == b.nparams_ && a.order_ == b.order_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t nparams_ = 0;
  int order_ = 0;
  detail::TermMap terms_;
};

/// Product truncated at `order`; requires order <= min(a.order(), b.order()).
SSeries sseries_mul(const SSeries& a, const SSeries& b, int order);

}  // namespace primform
