#pragma once

#include <cstddef>
#include <map>

#include "primform/poly.hpp"
#include "primform/sseries.hpp"

namespace primform {

/// Polynomial in x whose coefficients are truncated s-series. This is the
/// shape of forms g(x, s) d^n x before reduction.
class SeriesPoly {
 public:
  using TermMap = std::map<Monomial, SSeries, GrlexLess>;

  SeriesPoly() = default;
  SeriesPoly(std::size_t nvars, std::size_t nparams, int order)
      : nvars_(nvars), nparams_(nparams), order_(order) {}
  /// Lifts a plain polynomial (constant s-coefficients).
  static SeriesPoly from_poly(const Poly& p, std::size_t nparams, int order);

  std::size_t nvars() const { return nvars_; }
  std::size_t nparams() const { return nparams_; }
  int order() const { return order_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& x, const SSeries& c);
  void add_term(const Monomial& x, const Monomial& s, const Rational& c);

  SeriesPoly& operator+=(const SeriesPoly& o);
  SeriesPoly& operator-=(const SeriesPoly& o);
  SeriesPoly& operator*=(const Rational& c);
  friend SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b);

  SeriesPoly derivative(std::size_t var) const;
  /// Part of total s-degree k.
  SeriesPoly s_homogeneous_part(int k) const;

  friend bool operator==(const SeriesPoly& a, const SeriesPoly& b) {
    return a.nvars_ == b.nvars_ && a.nparams_ == b.nparams_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t nvars_ = 0;
  std::size_t nparams_ = 0;
  int order_ = 0;
  TermMap terms_;
};

}  // namespace primform
