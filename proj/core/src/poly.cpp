#include "primform/poly.hpp"

#include "primform/error.hpp"

namespace primform {

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Poly Poly::monomial(const Monomial& m, const Rational& c) {
  Poly p(m.size());
  p.add_term(m, c);
  return p;
}

Rational Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != nvars_) throw ContractViolation("Poly: variable-count mismatch");
  detail::add_term(terms_, m, c);
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.nvars_ != nvars_) throw ContractViolation("Poly: variable-count mismatch");
  detail::add_scaled(terms_, o.terms_, Rational(1));
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.nvars_ != nvars_) throw ContractViolation("Poly: variable-count mismatch");
  detail::add_scaled(terms_, o.terms_, Rational(-1));
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw ContractViolation("Poly: variable-count mismatch");
  Poly out(a.nvars_);
  out.terms_ = detail::multiply(a.terms_, b.terms_, -1);
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b) { return a * b; }

Poly Poly::derivative(std::size_t var) const {
  if (var >= nvars_) throw ContractViolation("Poly::derivative: variable out of range");
  Poly out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    out.add_term(m.lowered(var), c * Rational(m[var]));
  }
  return out;
}

std::string Poly::str(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (m.is_one()) {
      out += mag.str();
    } else if (mag.is_one()) {
      out += m.str(names);
    } else {
      out += mag.str() + "*" + m.str(names);
    }
  }
  return out;
}

Poly determinant(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw ContractViolation("determinant: empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw ContractViolation("determinant: matrix not square");
  const std::size_t nvars = m[0][0].nvars();
  if (n == 1) return m[0][0];
  Poly out(nvars);
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Poly term = m[0][col] * determinant(minor);
    if (col % 2 == 0)
      out += term;
    else
      out -= term;
  }
  return out;
}

}  // namespace primform
