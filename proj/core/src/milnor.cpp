#include "primform/milnor.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <string>

#include "primform/error.hpp"

namespace primform {

struct MilnorData::State {
  WeightedPolynomial f;
  std::vector<Poly> jacobian;
  std::vector<Monomial> basis;
  std::vector<Rational> degrees;
  std::vector<long> scaled_degrees;
  std::map<Monomial, std::size_t, GrlexLess> index;
  std::size_t socle = 0;
  std::size_t unit = 0;
  long table_bound = 0;
  Matrix eta;
  Matrix eta_inverse;

  mutable std::mutex mutex;
  mutable std::map<Monomial, MonomialDivision, GrlexLess> divisions;

  explicit State(WeightedPolynomial poly) : f(std::move(poly)) {}
};

namespace {

void enumerate(const Grading& g, long remaining, std::size_t var, std::vector<int>& exps,
               std::vector<Monomial>& out) {
  if (var == g.w.size()) {
    if (remaining == 0) out.emplace_back(exps);
    return;
  }
  for (int e = 0; static_cast<long>(e) * g.w[var] <= remaining; ++e) {
    exps[var] = e;
    enumerate(g, remaining - e * g.w[var], var + 1, exps, out);
  }
  exps[var] = 0;
}

struct PendingDivision {
  std::vector<std::pair<Monomial, Rational>> coeffs;
  std::vector<Poly> quotients;
};

struct DegreeSolve {
  std::vector<Monomial> standard;  // non-pivot monomials
  std::map<Monomial, PendingDivision, GrlexLess> witness;  // pivot monomials only
};

// Eliminates the generators u * d_i f of one weighted degree. `column_order`
// lists every monomial of that degree; pivots are taken in that order.
DegreeSolve solve_degree(const WeightedPolynomial& f, const std::vector<Poly>& jac,
                         const std::vector<Monomial>& column_order, long degree) {
  const Grading& g = f.grading();
  const std::size_t n = f.nvars();
  std::map<Monomial, std::size_t, GrlexLess> column;
  for (std::size_t c = 0; c < column_order.size(); ++c) column.emplace(column_order[c], c);

  struct Generator {
    std::size_t var;
    Monomial multiplier;
  };
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < n; ++i) {
    if (jac[i].is_zero()) continue;
    const long du = degree - (g.unit - g.w[i]);
    if (du < 0) continue;
    for (auto& u : monomials_of_degree(g, du)) gens.push_back({i, std::move(u)});
  }

  DegreeSolve out;
  if (gens.empty()) {
    out.standard = column_order;
    return out;
  }

  Matrix rows(gens.size(), column_order.size());
  for (std::size_t r = 0; r < gens.size(); ++r) {
    for (const auto& [m, c] : jac[gens[r].var].terms()) {
      const Monomial prod = gens[r].multiplier * m;
      rows(r, column.at(prod)) += c;
    }
  }
  Matrix track = Matrix::identity(gens.size());
  const auto pivots = reduce_to_rref(rows, &track);

  std::vector<bool> is_pivot(column_order.size(), false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t c = 0; c < column_order.size(); ++c)
    if (!is_pivot[c]) out.standard.push_back(column_order[c]);

  // Row r of the reduced matrix reads x^{pivot} + sum_{standard b} rows(r,b) x^b
  // and equals sum_g track(r,g) * generator_g.
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    PendingDivision div;
    div.quotients.assign(n, Poly(n));
    for (std::size_t c = 0; c < column_order.size(); ++c) {
      if (is_pivot[c] || rows(r, c).is_zero()) continue;
      div.coeffs.emplace_back(column_order[c], -rows(r, c));
    }
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      if (track(r, gi).is_zero()) continue;
      div.quotients[gens[gi].var].add_term(gens[gi].multiplier, track(r, gi));
    }
    out.witness.emplace(column_order[pivots[r]], std::move(div));
  }
  return out;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const Grading& g, long d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  std::vector<int> exps(g.w.size(), 0);
  enumerate(g, d, 0, exps, out);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

bool basis_order_less(const Grading& g, const Monomial& a, const Monomial& b) {
  const long da = g.degree(a), db = g.degree(b);
  if (da != db) return da < db;
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  // Earlier variables first: x before y, x*z before y*z.
  return GrlexLess{}(b, a);
}

MilnorData MilnorData::compute(const WeightedPolynomial& f, const std::optional<std::vector<Monomial>>& basis) {
  auto state = std::make_shared<State>(f);
  const std::size_t n = f.nvars();
  const Grading& g = f.grading();
  for (std::size_t i = 0; i < n; ++i) state->jacobian.push_back(f.poly().derivative(i));

  long c_hat = 0;
  long max_gap = 0;
  for (long w : g.w) {
    c_hat += g.unit - 2 * w;
    max_gap = std::max(max_gap, g.unit - w);
  }
  state->table_bound = c_hat + max_gap;

  std::set<Monomial, GrlexLess> requested;
  if (basis) {
    for (const auto& m : *basis) {
      if (m.size() != n) throw Rejection("basis monomial has the wrong number of variables");
      if (!requested.insert(m).second) throw Rejection("basis lists " + m.str(f.variables()) + " twice");
    }
  }

  std::vector<Monomial> standard;
  std::map<Monomial, PendingDivision, GrlexLess> pending;
  for (long d = 0; d <= state->table_bound; ++d) {
    std::vector<Monomial> monos = monomials_of_degree(g, d);
    if (monos.empty()) continue;
    std::vector<Monomial> order;
    if (basis) {
      for (const auto& m : monos)
        if (!requested.count(m)) order.push_back(m);
      for (const auto& m : monos)
        if (requested.count(m)) order.push_back(m);
    } else {
      order = monos;
    }
    DegreeSolve solved = solve_degree(f, state->jacobian, order, d);
    if (d > c_hat && !solved.standard.empty())
      throw Rejection("singularity is not isolated: the Jacobian algebra is nonzero in degree " +
                      g.to_rational(d).str() + " (above the central charge " + g.to_rational(c_hat).str() +
                      ")");
    if (basis) {
      std::size_t wanted = 0;
      for (const auto& m : monos) wanted += requested.count(m);
      std::set<Monomial, GrlexLess> got(solved.standard.begin(), solved.standard.end());
      bool ok = got.size() == wanted;
      for (const auto& m : got) ok = ok && requested.count(m);
      if (!ok)
        throw Rejection("explicit basis is not independent modulo the Jacobian ideal in degree " +
                        g.to_rational(d).str());
    }
    for (auto& entry : solved.witness) pending.insert(std::move(entry));
    for (const auto& m : solved.standard) standard.push_back(m);
  }

  if (basis) {
    for (const auto& m : requested) {
      if (g.degree(m) > state->table_bound)
        throw Rejection("explicit basis monomial " + m.str(f.variables()) + " lies in the Jacobian ideal");
    }
    if (standard.size() != basis->size())
      throw Rejection("explicit basis has " + std::to_string(basis->size()) + " elements, expected " +
                      std::to_string(standard.size()));
  }

  const Rational mu_expected = expected_milnor_number(f.weights());
  if (!mu_expected.is_integer() || Rational(static_cast<long>(standard.size())) != mu_expected)
    throw Rejection("Jacobian algebra has dimension " + std::to_string(standard.size()) +
                    " but the weights predict " + mu_expected.str() + "; singularity is not isolated");

  // Final basis order: caller's order, or the graded default.
  std::vector<Monomial> final_basis = basis ? *basis : standard;
  if (!basis)
    std::sort(final_basis.begin(), final_basis.end(),
              [&](const Monomial& a, const Monomial& b) { return basis_order_less(g, a, b); });
  for (std::size_t i = 0; i < final_basis.size(); ++i) state->index.emplace(final_basis[i], i);
  for (auto& [m, div] : pending) {
    MonomialDivision resolved;
    for (auto& [b, c] : div.coeffs) resolved.coeffs.emplace_back(state->index.at(b), std::move(c));
    std::sort(resolved.coeffs.begin(), resolved.coeffs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    resolved.quotients = std::move(div.quotients);
    state->divisions.emplace(m, std::move(resolved));
  }
  for (std::size_t i = 0; i < final_basis.size(); ++i) {
    MonomialDivision self;
    self.coeffs.emplace_back(i, Rational(1));
    self.quotients.assign(n, Poly(n));
    state->divisions.emplace(final_basis[i], std::move(self));
  }

  state->basis = std::move(final_basis);
  bool socle_found = false;
  bool unit_found = false;
  for (std::size_t i = 0; i < state->basis.size(); ++i) {
    const long d = g.degree(state->basis[i]);
    state->scaled_degrees.push_back(d);
    state->degrees.push_back(g.to_rational(d));
    if (d == c_hat) {
      if (socle_found) throw InternalError("Jacobian algebra has more than one socle monomial");
      socle_found = true;
      state->socle = i;
    }
    if (state->basis[i].is_one()) {
      unit_found = true;
      state->unit = i;
    }
  }
  if (!socle_found) throw InternalError("no basis element in the socle degree");
  if (!unit_found) throw Rejection("basis does not contain the monomial 1");

  MilnorData data(std::move(state));
  data.state_->eta = residue_pairing(data, f);
  auto inv = data.state_->eta.inverse();
  if (!inv) throw InternalError("residue pairing is degenerate");
  data.state_->eta_inverse = std::move(*inv);
  return data;
}

const WeightedPolynomial& MilnorData::polynomial() const { return state_->f; }
std::size_t MilnorData::mu() const { return state_->basis.size(); }
std::size_t MilnorData::nvars() const { return state_->f.nvars(); }
const std::vector<Monomial>& MilnorData::basis() const { return state_->basis; }
const std::vector<Rational>& MilnorData::degrees() const { return state_->degrees; }
const std::vector<long>& MilnorData::scaled_degrees() const { return state_->scaled_degrees; }
const Grading& MilnorData::grading() const { return state_->f.grading(); }
Rational MilnorData::central_charge() const { return primform::central_charge(state_->f); }
std::size_t MilnorData::socle_index() const { return state_->socle; }
const Monomial& MilnorData::socle() const { return state_->basis[state_->socle]; }
std::size_t MilnorData::unit_index() const { return state_->unit; }
const std::vector<Poly>& MilnorData::jacobian() const { return state_->jacobian; }
const Matrix& MilnorData::eta() const { return state_->eta; }
const Matrix& MilnorData::eta_inverse() const { return state_->eta_inverse; }

std::optional<std::size_t> MilnorData::basis_index(const Monomial& m) const {
  auto it = state_->index.find(m);
  if (it == state_->index.end()) return std::nullopt;
  return it->second;
}

const MonomialDivision& MilnorData::divide_monomial(const Monomial& m) const {
  if (m.size() != nvars()) throw ContractViolation("divide_monomial: variable-count mismatch");
  {
    std::lock_guard lock(state_->mutex);
    auto it = state_->divisions.find(m);
    if (it != state_->divisions.end()) return it->second;
  }
  const long d = grading().degree(m);
  if (d <= state_->table_bound) throw InternalError("division table is missing a monomial of degree " +
                                                    grading().to_rational(d).str());

  // x^a = x_j * x^{a - e_j}; reuse the witness of the smaller monomial.
  std::size_t j = 0;
  while (m[j] == 0) ++j;
  const Monomial xj = Monomial::variable(nvars(), j);
  const MonomialDivision& lower = divide_monomial(m.lowered(j));
  MonomialDivision out;
  out.quotients.assign(nvars(), Poly(nvars()));
  std::map<std::size_t, Rational> coeffs;
  for (std::size_t i = 0; i < nvars(); ++i) out.quotients[i] = lower.quotients[i] * Poly::monomial(xj);
  for (const auto& [b, c] : lower.coeffs) {
    const MonomialDivision& shifted = divide_monomial(state_->basis[b] * xj);
    for (const auto& [b2, c2] : shifted.coeffs) coeffs[b2] += c * c2;
    for (std::size_t i = 0; i < nvars(); ++i) out.quotients[i] += shifted.quotients[i] * c;
  }
  for (auto& [b, c] : coeffs)
    if (!c.is_zero()) out.coeffs.emplace_back(b, c);

  std::lock_guard lock(state_->mutex);
  return state_->divisions.emplace(m, std::move(out)).first->second;
}

JacobianDivision MilnorData::divide(const Poly& g) const {
  if (g.nvars() != nvars()) throw ContractViolation("divide: variable-count mismatch");
  JacobianDivision out;
  out.coeffs.assign(mu(), Rational(0));
  out.quotients.assign(nvars(), Poly(nvars()));
  for (const auto& [m, c] : g.terms()) {
    const MonomialDivision& div = divide_monomial(m);
    for (const auto& [b, cb] : div.coeffs) out.coeffs[b] += c * cb;
    for (std::size_t i = 0; i < nvars(); ++i)
      if (!div.quotients[i].is_zero()) out.quotients[i] += div.quotients[i] * c;
  }
  return out;
}

std::vector<Rational> MilnorData::normal_form(const Poly& g) const {
  if (g.nvars() != nvars()) throw ContractViolation("normal_form: variable-count mismatch");
  std::vector<Rational> out(mu(), Rational(0));
  for (const auto& [m, c] : g.terms())
    for (const auto& [b, cb] : divide_monomial(m).coeffs) out[b] += c * cb;
  return out;
}

MilnorData milnor_basis(const WeightedPolynomial& f, const std::optional<std::vector<Monomial>>& basis) {
  return MilnorData::compute(f, basis);
}

JacobianDivision divide_by_jacobian(const Poly& g, const MilnorData& data) { return data.divide(g); }

Matrix residue_pairing(const MilnorData& data, const WeightedPolynomial& f) {
  const std::size_t n = f.nvars();
  std::vector<std::vector<Poly>> hessian(n, std::vector<Poly>(n, Poly(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) hessian[i][j] = f.poly().derivative(i).derivative(j);
  const Poly hess = determinant(hessian);
  const Rational h = data.normal_form(hess)[data.socle_index()];
  if (h.is_zero()) throw InternalError("Hessian vanishes in the socle; singularity cannot be isolated");

  const std::size_t mu = data.mu();
  const Rational scale = Rational(static_cast<long>(mu)) / h;
  const long top = data.scaled_degrees()[data.socle_index()];
  Matrix eta(mu, mu);
  for (std::size_t a = 0; a < mu; ++a) {
    for (std::size_t b = a; b < mu; ++b) {
      if (data.scaled_degrees()[a] + data.scaled_degrees()[b] != top) continue;
      const Poly prod = Poly::monomial(data.basis()[a] * data.basis()[b]);
      const Rational r = data.normal_form(prod)[data.socle_index()];
      eta(a, b) = r * scale;
      eta(b, a) = eta(a, b);
    }
  }
  return eta;
}

}  // namespace primform
