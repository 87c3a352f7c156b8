#include "primform/brieskorn.hpp"

#include <algorithm>

#include "primform/error.hpp"

namespace primform {

ScalarClass canonical(ScalarClass c) {
  std::sort(c.begin(), c.end(), [](const ClassTerm& a, const ClassTerm& b) {
    return a.z_power != b.z_power ? a.z_power < b.z_power : a.basis < b.basis;
  });
  ScalarClass out;
  for (auto& t : c) {
    if (!out.empty() && out.back().z_power == t.z_power && out.back().basis == t.basis)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
    if (out.back().coeff.is_zero()) out.pop_back();
  }
  return out;
}

FormClass reduce(const SeriesPoly& g, const MilnorData& data) {
  const std::size_t n = data.nvars();
  if (g.nvars() != n) throw ContractViolation("reduce: variable-count mismatch");
  FormClass out(data.mu(), g.nparams(), g.order());
  SeriesPoly current = g;
  for (int z = 0; !current.is_zero(); ++z) {
    std::vector<SeriesPoly> quotients(n, SeriesPoly(n, g.nparams(), g.order()));
    for (const auto& [m, c] : current.terms()) {
      const MonomialDivision& div = data.divide_monomial(m);
      for (const auto& [b, cb] : div.coeffs) out.add(z, b, c * cb);
      for (std::size_t i = 0; i < n; ++i)
        for (const auto& [u, cu] : div.quotients[i].terms()) quotients[i].add_term(u, c * cu);
    }
    SeriesPoly next(n, g.nparams(), g.order());
    for (std::size_t i = 0; i < n; ++i) next -= quotients[i].derivative(i);
    current = std::move(next);
  }
  return out;
}

ScalarClass reduce(const Poly& g, const MilnorData& data) {
  const FormClass block = reduce(SeriesPoly::from_poly(g, 0, 0), data);
  ScalarClass out;
  const Monomial one(0);
  for (const auto& [z, row] : block.z_terms())
    for (std::size_t b = 0; b < row.size(); ++b)
      if (!row[b].is_zero()) out.push_back({z, b, row[b].coeff(one)});
  return out;
}

Reducer::Reducer(MilnorData data) : data_(std::move(data)) {}

const ScalarClass& Reducer::reduce_monomial(const Monomial& m) const {
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
  }
  const std::size_t n = data_.nvars();
  const MonomialDivision& div = data_.divide_monomial(m);
  ScalarClass out;
  for (const auto& [b, c] : div.coeffs) out.push_back({0, b, c});
  Poly rest(n);
  for (std::size_t i = 0; i < n; ++i) rest -= div.quotients[i].derivative(i);
  for (const auto& [u, cu] : rest.terms())
    for (const auto& t : reduce_monomial(u)) out.push_back({t.z_power + 1, t.basis, cu * t.coeff});
  out = canonical(std::move(out));

  std::lock_guard lock(mutex_);
  return cache_.emplace(m, std::move(out)).first->second;
}

FormClass Reducer::reduce(const SeriesPoly& g) const {
  if (g.nvars() != data_.nvars()) throw ContractViolation("reduce: variable-count mismatch");
  FormClass out(data_.mu(), g.nparams(), g.order());
  for (const auto& [m, c] : g.terms())
    for (const auto& t : reduce_monomial(m)) out.add(t.z_power, t.basis, c * t.coeff);
  return out;
}

ScalarClass Reducer::reduce(const Poly& g) const {
  if (g.nvars() != data_.nvars()) throw ContractViolation("reduce: variable-count mismatch");
  ScalarClass out;
  for (const auto& [m, c] : g.terms())
    for (const auto& t : reduce_monomial(m)) out.push_back({t.z_power, t.basis, c * t.coeff});
  return canonical(std::move(out));
}

std::size_t Reducer::cache_size() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

bool verify_exact_class(const std::vector<Poly>& h, const MilnorData& data) {
  const std::size_t n = data.nvars();
  if (h.size() != n) throw ContractViolation("verify_exact_class: need one polynomial per variable");
  Poly wedge(n);   // df ^ eta
  Poly exterior(n);  // d eta
  for (std::size_t i = 0; i < n; ++i) {
    if (h[i].nvars() != n) throw ContractViolation("verify_exact_class: variable-count mismatch");
    wedge += h[i] * data.jacobian()[i];
    exterior += h[i].derivative(i);
  }
  ScalarClass total = reduce(wedge, data);
  for (const auto& t : reduce(exterior, data)) total.push_back({t.z_power + 1, t.basis, t.coeff});
  return canonical(std::move(total)).empty();
}

}  // namespace primform
