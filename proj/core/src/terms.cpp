#include "primform/terms.hpp"

namespace primform::detail {

void add_term(TermMap& dst, const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = dst.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) dst.erase(it);
}

void add_scaled(TermMap& dst, const TermMap& src, const Rational& c) {
  if (c.is_zero()) return;
  for (const auto& [m, v] : src) add_term(dst, m, v * c);
}

TermMap multiply(const TermMap& a, const TermMap& b, int max_degree) {
  TermMap out;
  for (const auto& [ma, ca] : a) {
    if (max_degree >= 0 && ma.total_degree() > max_degree) continue;
    for (const auto& [mb, cb] : b) {
      if (max_degree >= 0 && ma.total_degree() + mb.total_degree() > max_degree) continue;
      add_term(out, ma * mb, ca * cb);
    }
  }
  return out;
}

}  // namespace primform::detail
