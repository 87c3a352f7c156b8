#include "primform/frobenius.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "primform/error.hpp"

namespace primform {

std::vector<SSeries> flat_coordinates(const PrimitiveFormResult& result) {
  if (result.order < 1) {
    // Nothing beyond s^0 is known; t = 0 at that truncation.
    return std::vector<SSeries>(result.J.mu(), SSeries(result.J.nparams(), result.order));
  }
  return j_components(result, -1);
}

SSeries substitute(const SSeries& f, const std::vector<SSeries>& g, int order) {
  if (g.size() != f.nparams()) throw ContractViolation("substitute: need one series per parameter");
  const std::size_t m = g.empty() ? 0 : g.front().nparams();
  for (const auto& gi : g) {
    if (gi.nparams() != m) throw ContractViolation("substitute: inconsistent target parameter counts");
    if (!gi.coeff(Monomial(m)).is_zero()) throw ContractViolation("substitute: series must vanish at the origin");
  }
  std::map<Monomial, SSeries, GrlexLess> powers;
  powers.emplace(Monomial(f.nparams()), SSeries::constant(m, order, Rational(1)));
  // Each g_i has order >= 1, so a monomial of degree d contributes from degree d.
  auto value = [&](auto&& self, const Monomial& a) -> const SSeries& {
    auto it = powers.find(a);
    if (it != powers.end()) return it->second;
    std::size_t j = 0;
    while (a[j] == 0) ++j;
    const SSeries& lower = self(self, a.lowered(j));
    SSeries v(m, order);
    v.add_product(lower, g[j]);
    return powers.emplace(a, std::move(v)).first->second;
  };
  SSeries out(m, order);
  for (const auto& [a, c] : f.terms()) {
    if (a.total_degree() > order) continue;
    const SSeries& v = value(value, a);
    for (const auto& [b, cb] : v.terms()) out.add_term(b, c * cb);
  }
  return out;
}

std::vector<SSeries> invert_coordinates(const std::vector<SSeries>& t_of_s, int order) {
  const std::size_t n = t_of_s.size();
  std::vector<SSeries> nonlinear;
  for (std::size_t a = 0; a < n; ++a) {
    const SSeries& t = t_of_s[a];
    if (t.nparams() != n) throw ContractViolation("invert_coordinates: series must be in n parameters");
    if (!t.coeff(Monomial(n)).is_zero()) throw ContractViolation("invert_coordinates: nonzero constant term");
    for (std::size_t b = 0; b < n; ++b) {
      const Rational expected = a == b ? Rational(1) : Rational(0);
      if (t.coeff(Monomial::variable(n, b)) != expected)
        throw ContractViolation("invert_coordinates: linear part is not the identity");
    }
    SSeries h = t.truncated(order);
    h -= SSeries::variable(n, order, a);
    nonlinear.push_back(std::move(h));
  }
  // s = t - h(s); each pass fixes one more degree.
  std::vector<SSeries> s;
  for (std::size_t a = 0; a < n; ++a) s.push_back(SSeries::variable(n, order, a));
  for (int pass = 1; pass < order; ++pass) {
    std::vector<SSeries> next;
    for (std::size_t a = 0; a < n; ++a) next.push_back(SSeries::variable(n, order, a) - substitute(nonlinear[a], s, order));
    s = std::move(next);
  }
  return s;
}

std::vector<SSeries> potential_gradient(const PrimitiveFormResult& result, const MilnorData& milnor,
                                        const std::vector<SSeries>& s_of_t) {
  const std::size_t mu = milnor.mu();
  const int top = std::max(result.order - 1, 0);
  std::vector<SSeries> gradient(mu, SSeries(mu, top));
  if (result.order < 2) return gradient;
  std::vector<SSeries> j2;
  for (const auto& c : j_components(result, -2)) j2.push_back(substitute(c, s_of_t, top));
  const Matrix& eta = milnor.eta();
  for (std::size_t a = 0; a < mu; ++a)
    for (std::size_t b = 0; b < mu; ++b)
      if (!eta(a, b).is_zero()) gradient[a] += j2[b] * eta(a, b);
  return gradient;
}

CheckReport integrability_check(const std::vector<SSeries>& gradient) {
  CheckReport report;
  report.name = "integrability";
  const std::size_t n = gradient.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      ++report.checked;
      SSeries lhs = gradient[a].derivative(b);
      SSeries rhs = gradient[b].derivative(a);
      const int cap = std::min(gradient[a].order(), gradient[b].order()) - 1;
      if (cap < 0) continue;
      if (lhs.truncated(cap) != rhs.truncated(cap))
        report.fail("d_t" + std::to_string(b + 1) + " G_" + std::to_string(a + 1) + " != d_t" +
                    std::to_string(a + 1) + " G_" + std::to_string(b + 1));
    }
  }
  return report;
}

SSeries integrate_gradient(const std::vector<SSeries>& gradient, int order) {
  const std::size_t n = gradient.size();
  SSeries f0(n, order);
  for (std::size_t a = 0; a < n; ++a) {
    for (const auto& [m, c] : gradient[a].terms()) {
      const int d = m.total_degree() + 1;
      if (d < 3 || d > order) continue;
      f0.add_term(m.raised(a), c * Rational(1, d));
    }
  }
  return f0;
}

SSeries prepotential(const PrimitiveFormResult& result, const MilnorData& milnor) {
  return build_frobenius(result, milnor).prepotential;
}

SSeries four_point_function(const SSeries& f0) { return f0.homogeneous_part(4); }

namespace {

using Triple = std::array<std::size_t, 3>;

Triple sorted_triple(std::size_t a, std::size_t b, std::size_t c) {
  Triple t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

CheckReport wdvv_check(const SSeries& f0, const Matrix& eta, int order) {
  CheckReport report;
  report.name = "wdvv";
  const std::size_t n = f0.nparams();
  const int cap = order - 3;
  if (cap < 0 || f0.is_zero()) return report;
  auto inv = eta.inverse();
  if (!inv) throw ContractViolation("wdvv_check: metric is degenerate");
  const Matrix& eta_inv = *inv;

  std::map<Triple, SSeries> third;
  for (std::size_t a = 0; a < n; ++a) {
    const SSeries da = f0.derivative(a);
    if (da.is_zero()) continue;
    for (std::size_t b = a; b < n; ++b) {
      const SSeries dab = da.derivative(b);
      if (dab.is_zero()) continue;
      for (std::size_t c = b; c < n; ++c) {
        SSeries dabc = dab.derivative(c).truncated(cap);
        if (!dabc.is_zero()) third.emplace(Triple{a, b, c}, std::move(dabc));
      }
    }
  }
  const SSeries zero(n, cap);
  auto F = [&](std::size_t a, std::size_t b, std::size_t c) -> const SSeries& {
    auto it = third.find(sorted_triple(a, b, c));
    return it == third.end() ? zero : it->second;
  };

  // raised[a][b][f] = sum_e F_{abe} eta^{ef}
  std::vector<std::vector<std::vector<SSeries>>> raised(
      n, std::vector<std::vector<SSeries>>(n, std::vector<SSeries>(n, zero)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t e = 0; e < n; ++e) {
        const SSeries& fabe = F(a, b, e);
        if (fabe.is_zero()) continue;
        for (std::size_t f = 0; f < n; ++f)
          if (!eta_inv(e, f).is_zero()) raised[a][b][f] += fabe * eta_inv(e, f);
      }

  auto contract = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    SSeries out(n, cap);
    for (std::size_t f = 0; f < n; ++f) {
      const SSeries& left = raised[a][b][f];
      if (left.is_zero()) continue;
      const SSeries& right = F(f, c, d);
      if (!right.is_zero()) out.add_product(left, right);
    }
    return out;
  };

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t d = 0; d < n; ++d)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c) {
          ++report.checked;
          SSeries diff = contract(a, b, c, d) - contract(a, c, b, d);
          if (!diff.is_zero()) {
            const auto& [mono, coeff] = *diff.terms().begin();
            std::string where;
            for (std::size_t i = 0; i < n; ++i)
              if (mono[i]) where += "t" + std::to_string(i + 1) + "^" + std::to_string(mono[i]) + " ";
            report.fail("(a,b,c,d)=(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "," +
                        std::to_string(c + 1) + "," + std::to_string(d + 1) + ") differs at monomial " +
                        (where.empty() ? std::string("1") : where) + "by " + coeff.str());
          }
        }
  return report;
}

CheckReport euler_check(const SSeries& f0, const std::vector<Rational>& flat_degrees, const Rational& c_hat) {
  CheckReport report;
  report.name = "euler";
  if (flat_degrees.size() != f0.nparams()) throw ContractViolation("euler_check: wrong number of degrees");
  const Rational target = Rational(3) - c_hat;
  for (const auto& [m, c] : f0.terms()) {
    ++report.checked;
    Rational deg(0);
    for (std::size_t a = 0; a < m.size(); ++a) deg += Rational(m[a]) * flat_degrees[a];
    if (deg != target) {
      std::string where;
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i]) where += "t" + std::to_string(i + 1) + "^" + std::to_string(m[i]) + " ";
      report.fail("monomial " + where + "has degree " + deg.str() + ", expected " + target.str());
    }
  }
  return report;
}

CheckReport gradient_check(const SSeries& f0, const std::vector<SSeries>& gradient, int order) {
  CheckReport report;
  report.name = "gradient";
  if (gradient.size() != f0.nparams()) throw ContractViolation("gradient_check: wrong gradient size");
  const int cap = order - 1;
  for (std::size_t a = 0; a < gradient.size(); ++a) {
    ++report.checked;
    SSeries lhs = f0.derivative(a).truncated(std::max(cap, 0));
    SSeries rhs(gradient[a].nparams(), std::max(cap, 0));
    for (const auto& [m, c] : gradient[a].terms())
      if (m.total_degree() >= 2 && m.total_degree() <= cap) rhs.add_term(m, c);
    if (lhs != rhs) report.fail("dF0/dt" + std::to_string(a + 1) + " differs from the stored gradient");
  }
  return report;
}

CheckReport origin_ring_check(const SSeries& f0, const MilnorData& milnor) {
  CheckReport report;
  report.name = "origin_ring";
  if (f0.order() < 3) return report;
  const std::size_t mu = milnor.mu();
  for (std::size_t a = 0; a < mu; ++a)
    for (std::size_t b = a; b < mu; ++b) {
      const std::vector<Rational> prod = milnor.normal_form(Poly::monomial(milnor.basis()[a] * milnor.basis()[b]));
      for (std::size_t c = b; c < mu; ++c) {
        ++report.checked;
        Rational expected(0);
        for (std::size_t e = 0; e < mu; ++e)
          if (!prod[e].is_zero()) expected += prod[e] * milnor.eta()(e, c);
        Monomial m(mu);
        m = m.raised(a).raised(b).raised(c);
        // coefficient of t_a t_b t_c times the multiplicity of the derivative
        Rational mult(1);
        for (std::size_t i = 0; i < mu; ++i)
          for (int k = 2; k <= m[i]; ++k) mult *= Rational(k);
        const Rational got = f0.coeff(m) * mult;
        if (got != expected)
          report.fail("d^3F0(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "," + std::to_string(c + 1) +
                      ")|0 = " + got.str() + ", ring gives " + expected.str());
      }
    }
  return report;
}

FrobeniusData build_frobenius(const PrimitiveFormResult& result, const MilnorData& milnor) {
  FrobeniusData data;
  data.order = result.order;
  data.eta_flat = milnor.eta();
  for (const auto& d : milnor.degrees()) data.flat_degrees.push_back(Rational(1) - d);
  const std::size_t mu = milnor.mu();
  if (result.order < 1) {
    data.t_of_s.assign(mu, SSeries(mu, result.order));
    data.s_of_t = data.t_of_s;
    data.gradient.assign(mu, SSeries(mu, 0));
    data.prepotential = SSeries(mu, result.order);
    return data;
  }
  data.t_of_s = flat_coordinates(result);
  data.s_of_t = invert_coordinates(data.t_of_s, result.order);
  data.gradient = potential_gradient(result, milnor, data.s_of_t);
  const CheckReport integrable = integrability_check(data.gradient);
  if (!integrable.passed)
    throw InternalError("potential gradient is not integrable: " + integrable.violations.front());
  data.prepotential = integrate_gradient(data.gradient, result.order);
  return data;
}

}  // namespace primform
