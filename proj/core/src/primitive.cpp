#include "primform/primitive.hpp"

#include "primform/error.hpp"

namespace primform {

UnfoldingState build_unfolding(const WeightedPolynomial& f, const MilnorData& milnor, int order) {
  if (order < 0) throw ContractViolation("build_unfolding: negative order");
  const std::size_t mu = milnor.mu();
  SeriesPoly deformation(f.nvars(), mu, order);
  std::vector<Rational> s_degrees;
  for (std::size_t a = 0; a < mu; ++a) {
    deformation.add_term(milnor.basis()[a], Monomial::variable(mu, a), Rational(1));
    s_degrees.push_back(Rational(1) - milnor.degrees()[a]);
  }
  return UnfoldingState{f, milnor, std::move(deformation), std::move(s_degrees), order};
}

namespace {

// (F - f)^m / m! for m = 0..order.
std::vector<SeriesPoly> exponential_terms(const UnfoldingState& state) {
  const std::size_t mu = state.milnor.mu();
  std::vector<SeriesPoly> powers;
  powers.push_back(SeriesPoly::from_poly(Poly::constant(state.base.nvars(), Rational(1)), mu, state.order));
  for (int m = 1; m <= state.order; ++m) {
    SeriesPoly next = powers.back() * state.deformation;
    next *= Rational(1, m);
    powers.push_back(std::move(next));
  }
  return powers;
}

// sum_b row[b] * phi_b as a polynomial with series coefficients.
SeriesPoly lift_row(const LaurentBlock::Row& row, const MilnorData& milnor, std::size_t nparams, int order) {
  SeriesPoly g(milnor.nvars(), nparams, order);
  for (std::size_t b = 0; b < row.size(); ++b)
    if (!row[b].is_zero()) g.add_term(milnor.basis()[b], row[b]);
  return g;
}

LaurentBlock unit_block(const MilnorData& milnor, int order) {
  const std::size_t mu = milnor.mu();
  LaurentBlock out(mu, mu, order);
  out.add(0, milnor.unit_index(), Monomial(mu), Rational(1));
  return out;
}

}  // namespace

PrimitiveFormResult solve_star(const UnfoldingState& state) {
  Reducer reducer(state.milnor);
  return solve_star(state, reducer);
}

PrimitiveFormResult solve_star(const UnfoldingState& state, const Reducer& reducer) {
  const MilnorData& milnor = state.milnor;
  const std::size_t mu = milnor.mu();
  const int order = state.order;
  const std::vector<SeriesPoly> powers = exponential_terms(state);

  std::vector<LaurentBlock> zeta_slices{unit_block(milnor, order)};
  LaurentBlock zeta = zeta_slices.front();
  LaurentBlock J = zeta_slices.front();

  for (int k = 1; k <= order; ++k) {
    LaurentBlock known(mu, mu, order);
    for (int m = 1; m <= k; ++m) {
      for (const auto& [l, row] : zeta_slices[k - m].z_terms()) {
        const SeriesPoly form = lift_row(row, milnor, mu, order) * powers[m];
        known += block_scale_z(reducer.reduce(form), l - m);
      }
    }
    LaurentBlock correction = known.nonnegative_part();
    correction *= Rational(-1);
    zeta += correction;
    J += known.negative_part();
    zeta_slices.push_back(std::move(correction));
  }
  return PrimitiveFormResult{std::move(zeta), std::move(J), order};
}

std::vector<SSeries> j_components(const PrimitiveFormResult& result, int m) {
  if (m > -1) throw ContractViolation("j_components: z-power must be <= -1");
  return result.J.row(m);
}

LaurentBlock star_defect(const UnfoldingState& state, const PrimitiveFormResult& result) {
  const MilnorData& milnor = state.milnor;
  const std::size_t mu = milnor.mu();
  const int order = state.order;
  const std::vector<SeriesPoly> powers = exponential_terms(state);

  LaurentBlock total(mu, mu, order);
  for (const auto& [l, row] : result.zeta.z_terms()) {
    const SeriesPoly g = lift_row(row, milnor, mu, order);
    for (int m = 0; m <= order; ++m) total += block_scale_z(reduce(g * powers[m], milnor), l - m);
  }
  total -= result.J;
  return total;
}

std::vector<std::string> grading_violations(const UnfoldingState& state, const PrimitiveFormResult& result) {
  const MilnorData& milnor = state.milnor;
  const long unit = milnor.grading().unit;
  std::vector<long> s_deg;
  for (long d : milnor.scaled_degrees()) s_deg.push_back(unit - d);

  std::vector<std::string> out;
  auto scan = [&](const LaurentBlock& block, const char* label) {
    for (const auto& [z, row] : block.z_terms()) {
      for (std::size_t b = 0; b < row.size(); ++b) {
        for (const auto& [s, c] : row[b].terms()) {
          long deg = static_cast<long>(z) * unit + milnor.scaled_degrees()[b];
          for (std::size_t a = 0; a < s.size(); ++a) deg += s[a] * s_deg[a];
          if (deg != 0)
            out.push_back(std::string(label) + ": z^" + std::to_string(z) + " term on basis " +
                          std::to_string(b + 1) + " has degree " + milnor.grading().to_rational(deg).str());
        }
      }
    }
  };
  scan(result.zeta, "zeta");
  scan(result.J, "J");
  return out;
}

}  // namespace primform
