#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "primform/sseries.hpp"

namespace primform {

/// Element of B((z))[[s]]: for each z-power m, a vector of mu s-series
/// (the coefficients on the basis classes [phi_alpha d^n x]). Zero rows are
/// never stored.
class LaurentBlock {
 public:
  using Row = std::vector<SSeries>;

  LaurentBlock() = default;
  LaurentBlock(std::size_t mu, std::size_t nparams, int order)
      : mu_(mu), nparams_(nparams), order_(order) {}

  std::size_t mu() const { return mu_; }
  std::size_t nparams() const { return nparams_; }
  int order() const { return order_; }
  const std::map<int, Row>& z_terms() const { return rows_; }
  bool is_zero() const { return rows_.empty(); }

  /// Coefficient of z^m [phi_alpha]; zero series when absent.
  SSeries component(int m, std::size_t alpha) const;
  /// Row at z^m; all-zero row when absent.
  Row row(int m) const;

  void add(int m, std::size_t alpha, const SSeries& c);
  /// Adds scale * monomial_s into the (m, alpha) slot.
  void add(int m, std::size_t alpha, const Monomial& s, const Rational& c);

  LaurentBlock& operator+=(const LaurentBlock& o);
  LaurentBlock& operator-=(const LaurentBlock& o);
  LaurentBlock& operator*=(const Rational& c);
  friend LaurentBlock operator+(LaurentBlock a, const LaurentBlock& b) { return a += b; }
  friend LaurentBlock operator-(LaurentBlock a, const LaurentBlock& b) { return a -= b; }

  /// Part with z-powers >= 0 (pi_plus) and <= -1 (pi_minus).
  LaurentBlock nonnegative_part() const;
  LaurentBlock negative_part() const;
  /// Part of total s-degree k.
  LaurentBlock s_homogeneous_part(int k) const;
  LaurentBlock truncated(int order) const;

  int min_z() const;
  int max_z() const;

  friend bool operator==(const LaurentBlock& a, const LaurentBlock& b) {
    return a.mu_ == b.mu_ && a.nparams_ == b.nparams_ && a.rows_ == b.rows_;
  }

 private:
  Row& row_ref(int m);
  void drop_if_zero(int m);

  std::size_t mu_ = 0;
  std::size_t nparams_ = 0;
  int order_ = 0;
  std::map<int, Row> rows_;
};

/// Multiplication by z^m.
LaurentBlock block_scale_z(const LaurentBlock& b, int m);

}  // namespace primform
