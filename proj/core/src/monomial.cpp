#include "primform/monomial.hpp"

#include <numeric>

#include "primform/error.hpp"

namespace primform {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_)
    if (e < 0) throw ContractViolation("Monomial: negative exponent");
  total_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i, int power) {
  if (i >= nvars) throw ContractViolation("Monomial::variable: index out of range");
  Monomial m(nvars);
  m.exps_[i] = power;
  m.total_ = power;
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (o.size() != size()) throw ContractViolation("Monomial: variable-count mismatch");
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += o.exps_[i];
  out.total_ += o.total_;
  return out;
}

bool Monomial::divides(const Monomial& o) const {
  if (o.size() != size()) throw ContractViolation("Monomial: variable-count mismatch");
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& o) const {
  if (!o.divides(*this)) throw ContractViolation("Monomial::quotient: not divisible");
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= o.exps_[i];
  out.total_ -= o.total_;
  return out;
}

Monomial Monomial::lowered(std::size_t i) const {
  if (i >= size() || exps_[i] == 0) throw ContractViolation("Monomial::lowered: exponent already zero");
  Monomial out(*this);
  --out.exps_[i];
  --out.total_;
  return out;
}

Monomial Monomial::raised(std::size_t i, int by) const {
  if (i >= size()) throw ContractViolation("Monomial::raised: index out of range");
  Monomial out(*this);
  out.exps_[i] += by;
  out.total_ += by;
  return out;
}

std::string Monomial::str(std::span<const std::string> names) const {
  if (names.size() != exps_.size()) throw ContractViolation("Monomial::str: wrong number of names");
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  const std::size_t n = std::min(ea.size(), eb.size());
  for (std::size_t i = 0; i < n; ++i)
    if (ea[i] != eb[i]) return ea[i] < eb[i];
  return ea.size() < eb.size();
}

std::vector<std::string> default_variable_names(std::size_t n) {
  if (n <= 3) {
    static const char* const xyz[] = {"x", "y", "z"};
    return std::vector<std::string>(xyz, xyz + n);
  }
  return indexed_names("x", n);
}

std::vector<std::string> indexed_names(const std::string& stem, std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i + 1));
  return out;
}

}  // namespace primform
