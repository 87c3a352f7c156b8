#include "primform/laurent.hpp"

#include <algorithm>

#include "primform/error.hpp"

namespace primform {

SSeries LaurentBlock::component(int m, std::size_t alpha) const {
  if (alpha >= mu_) throw ContractViolation("LaurentBlock: basis index out of range");
  auto it = rows_.find(m);
  return it == rows_.end() ? SSeries(nparams_, order_) : it->second[alpha];
}

LaurentBlock::Row LaurentBlock::row(int m) const {
  auto it = rows_.find(m);
  return it == rows_.end() ? Row(mu_, SSeries(nparams_, order_)) : it->second;
}

LaurentBlock::Row& LaurentBlock::row_ref(int m) {
  auto it = rows_.find(m);
  if (it == rows_.end()) it = rows_.emplace(m, Row(mu_, SSeries(nparams_, order_))).first;
  return it->second;
}

void LaurentBlock::drop_if_zero(int m) {
  auto it = rows_.find(m);
  if (it == rows_.end()) return;
  if (std::all_of(it->second.begin(), it->second.end(), [](const SSeries& s) { return s.is_zero(); }))
    rows_.erase(it);
}

void LaurentBlock::add(int m, std::size_t alpha, const SSeries& c) {
  if (alpha >= mu_) throw ContractViolation("LaurentBlock: basis index out of range");
  if (c.nparams() != nparams_) throw ContractViolation("LaurentBlock: parameter-count mismatch");
  if (c.is_zero()) return;
  row_ref(m)[alpha] += c;
  drop_if_zero(m);
}

void LaurentBlock::add(int m, std::size_t alpha, const Monomial& s, const Rational& c) {
  if (alpha >= mu_) throw ContractViolation("LaurentBlock: basis index out of range");
  if (c.is_zero() || s.total_degree() > order_) return;
  row_ref(m)[alpha].add_term(s, c);
  drop_if_zero(m);
}

LaurentBlock& LaurentBlock::operator+=(const LaurentBlock& o) {
  if (o.mu_ != mu_) throw ContractViolation("LaurentBlock: basis size mismatch");
  for (const auto& [m, r] : o.rows_) {
    Row& dst = row_ref(m);
    for (std::size_t a = 0; a < mu_; ++a) dst[a] += r[a];
    drop_if_zero(m);
  }
  return *this;
}

LaurentBlock& LaurentBlock::operator-=(const LaurentBlock& o) {
  if (o.mu_ != mu_) throw ContractViolation("LaurentBlock: basis size mismatch");
  for (const auto& [m, r] : o.rows_) {
    Row& dst = row_ref(m);
    for (std::size_t a = 0; a < mu_; ++a) dst[a] -= r[a];
    drop_if_zero(m);
  }
  return *this;
}

LaurentBlock& LaurentBlock::operator*=(const Rational& c) {
  if (c.is_zero()) {
    rows_.clear();
    return *this;
  }
  for (auto& [m, r] : rows_)
    for (auto& s : r) s *= c;
  return *this;
}

LaurentBlock LaurentBlock::nonnegative_part() const {
  LaurentBlock out(mu_, nparams_, order_);
  for (auto it = rows_.lower_bound(0); it != rows_.end(); ++it) out.rows_.insert(*it);
  return out;
}

LaurentBlock LaurentBlock::negative_part() const {
  LaurentBlock out(mu_, nparams_, order_);
  for (auto it = rows_.begin(); it != rows_.end() && it->first < 0; ++it) out.rows_.insert(*it);
  return out;
}

LaurentBlock LaurentBlock::s_homogeneous_part(int k) const {
  LaurentBlock out(mu_, nparams_, order_);
  for (const auto& [m, r] : rows_) {
    Row part;
    part.reserve(mu_);
    bool any = false;
    for (const auto& s : r) {
      part.push_back(s.homogeneous_part(k));
      any = any || !part.back().is_zero();
    }
    if (any) out.rows_.emplace(m, std::move(part));
  }
  return out;
}

LaurentBlock LaurentBlock::truncated(int order) const {
  LaurentBlock out(mu_, nparams_, order);
  for (const auto& [m, r] : rows_) {
    Row part;
    part.reserve(mu_);
    bool any = false;
    for (const auto& s : r) {
      part.push_back(s.truncated(order));
      any = any || !part.back().is_zero();
    }
    if (any) out.rows_.emplace(m, std::move(part));
  }
  return out;
}

int LaurentBlock::min_z() const {
  if (rows_.empty()) throw ContractViolation("LaurentBlock::min_z on zero block");
  return rows_.begin()->first;
}

int LaurentBlock::max_z() const {
  if (rows_.empty()) throw ContractViolation("LaurentBlock::max_z on zero block");
  return rows_.rbegin()->first;
}

LaurentBlock block_scale_z(const LaurentBlock& b, int m) {
  if (m == 0) return b;
  LaurentBlock out(b.mu(), b.nparams(), b.order());
  for (const auto& [p, r] : b.z_terms())
    for (std::size_t a = 0; a < r.size(); ++a) out.add(p + m, a, r[a]);
  return out;
}

}  // namespace primform
