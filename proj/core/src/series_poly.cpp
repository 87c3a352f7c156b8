#include "primform/series_poly.hpp"

#include <algorithm>

#include "primform/error.hpp"

namespace primform {

SeriesPoly SeriesPoly::from_poly(const Poly& p, std::size_t nparams, int order) {
  SeriesPoly out(p.nvars(), nparams, order);
  for (const auto& [m, c] : p.terms()) out.add_term(m, SSeries::constant(nparams, order, c));
  return out;
}

void SeriesPoly::add_term(const Monomial& x, const SSeries& c) {
  if (x.size() != nvars_ || c.nparams() != nparams_)
    throw ContractViolation("SeriesPoly: variable/parameter-count mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(x);
  if (it == terms_.end()) {
    SSeries coeff(nparams_, order_);
    coeff += c;
    if (!coeff.is_zero()) terms_.emplace(x, std::move(coeff));
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void SeriesPoly::add_term(const Monomial& x, const Monomial& s, const Rational& c) {
  if (x.size() != nvars_ || s.size() != nparams_)
    throw ContractViolation("SeriesPoly: variable/parameter-count mismatch");
  if (c.is_zero() || s.total_degree() > order_) return;
  auto it = terms_.try_emplace(x, nparams_, order_).first;
  it->second.add_term(s, c);
  if (it->second.is_zero()) terms_.erase(it);
}

SeriesPoly& SeriesPoly::operator+=(const SeriesPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SeriesPoly& SeriesPoly::operator-=(const SeriesPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SeriesPoly& SeriesPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b) {
  if (a.nvars_ != b.nvars_ || a.nparams_ != b.nparams_)
    throw ContractViolation("SeriesPoly: variable/parameter-count mismatch");
  SeriesPoly out(a.nvars_, a.nparams_, std::min(a.order_, b.order_));
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if (ca.lowest_degree() + cb.lowest_degree() > out.order_) continue;
      auto it = out.terms_.try_emplace(ma * mb, out.nparams_, out.order_).first;
      it->second.add_product(ca, cb);
      if (it->second.is_zero()) out.terms_.erase(it);
    }
  }
  return out;
}

SeriesPoly SeriesPoly::derivative(std::size_t var) const {
  if (var >= nvars_) throw ContractViolation("SeriesPoly::derivative: variable out of range");
  SeriesPoly out(nvars_, nparams_, order_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    out.add_term(m.lowered(var), c * Rational(m[var]));
  }
  return out;
}

SeriesPoly SeriesPoly::s_homogeneous_part(int k) const {
  SeriesPoly out(nvars_, nparams_, order_);
  for (const auto& [m, c] : terms_) {
    SSeries part = c.homogeneous_part(k);
    if (!part.is_zero()) out.terms_.emplace(m, std::move(part));
  }
  return out;
}

}  // namespace primform
