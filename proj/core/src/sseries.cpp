#include "primform/sseries.hpp"

#include <algorithm>

#include "primform/error.hpp"
#include "primform/poly.hpp"

namespace primform {

SSeries::SSeries(std::size_t nparams, int order) : nparams_(nparams), order_(order) {
  if (order < 0) throw ContractViolation("SSeries: negative truncation order");
}

SSeries SSeries::constant(std::size_t nparams, int order, const Rational& c) {
  SSeries s(nparams, order);
  s.add_term(Monomial(nparams), c);
  return s;
}

SSeries SSeries::variable(std::size_t nparams, int order, std::size_t i) {
  SSeries s(nparams, order);
  s.add_term(Monomial::variable(nparams, i), Rational(1));
  return s;
}

SSeries SSeries::monomial(const Monomial& m, int order, const Rational& c) {
  SSeries s(m.size(), order);
  s.add_term(m, c);
  return s;
}

Rational SSeries::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SSeries::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != nparams_) throw ContractViolation("SSeries: parameter-count mismatch");
  if (m.total_degree() > order_) return;
  detail::add_term(terms_, m, c);
}

SSeries& SSeries::operator+=(const SSeries& o) {
  if (o.nparams_ != nparams_) throw ContractViolation("SSeries: parameter-count mismatch");
  for (const auto& [m, c] : o.terms_)
    if (m.total_degree() <= order_) detail::add_term(terms_, m, c);
  return *this;
}

SSeries& SSeries::operator-=(const SSeries& o) {
  if (o.nparams_ != nparams_) throw ContractViolation("SSeries: parameter-count mismatch");
  for (const auto& [m, c] : o.terms_)
    if (m.total_degree() <= order_) detail::add_term(terms_, m, -c);
  return *this;
}

SSeries& SSeries::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

SSeries operator*(const SSeries& a, const SSeries& b) {
  return sseries_mul(a, b, std::min(a.order_, b.order_));
}

void SSeries::add_product(const SSeries& a, const SSeries& b, const Rational& c) {
  if (a.nparams_ != nparams_ || b.nparams_ != nparams_)
    throw ContractViolation("SSeries: parameter-count mismatch");
  if (c.is_zero()) return;
  for (const auto& [ma, ca] : a.terms_) {
    if (ma.total_degree() > order_) continue;
    const Rational cac = ca * c;
    for (const auto& [mb, cb] : b.terms_) {
      if (ma.total_degree() + mb.total_degree() > order_) continue;
      detail::add_term(terms_, ma * mb, cac * cb);
    }
  }
}

SSeries sseries_mul(const SSeries& a, const SSeries& b, int order) {
  if (a.nparams() != b.nparams()) throw ContractViolation("SSeries: parameter-count mismatch");
  if (order > std::min(a.order(), b.order()))
    throw ContractViolation("sseries_mul: order exceeds operand truncation");
  SSeries out(a.nparams(), order);
  out.add_product(a, b);
  return out;
}

SSeries SSeries::truncated(int order) const {
  SSeries out(nparams_, order);
  for (const auto& [m, c] : terms_)
    if (m.total_degree() <= order) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

SSeries SSeries::homogeneous_part(int k) const {
  SSeries out(nparams_, order_);
  for (const auto& [m, c] : terms_)
    if (m.total_degree() == k) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

SSeries SSeries::derivative(std::size_t param) const {
  if (param >= nparams_) throw ContractViolation("SSeries::derivative: parameter out of range");
  SSeries out(nparams_, order_);
  for (const auto& [m, c] : terms_) {
    if (m[param] == 0) continue;
    detail::add_term(out.terms_, m.lowered(param), c * Rational(m[param]));
  }
  return out;
}

int SSeries::lowest_degree() const {
  return terms_.empty() ? -1 : terms_.begin()->first.total_degree();
}

std::string SSeries::str(std::span<const std::string> names) const {
  Poly p(nparams_);
  for (const auto& [m, c] : terms_) p.add_term(m, c);
  return p.str(names);
}

}  // namespace primform
