#pragma once

#include <string>
#include <vector>

#include "primform/brieskorn.hpp"

namespace primform {

/// Universal unfolding F = f + sum_alpha s_alpha phi_alpha over the basis of
/// Jac(f), truncated at total s-order `order`.
struct UnfoldingState {
  WeightedPolynomial base;
  MilnorData milnor;
  /// F - f as a polynomial in x with s-series coefficients.
  SeriesPoly deformation;
  /// deg s_alpha = 1 - d_alpha.
  std::vector<Rational> s_degrees;
  int order = 0;
};

UnfoldingState build_unfolding(const WeightedPolynomial& f, const MilnorData& milnor, int order);

/// The unique pair with zeta in B[[z]][[s]], J in [d^n x] + z^-1 B[z^-1][[s]]
/// and e^{(F-f)/z} zeta = J, truncated at s-order `order`.
struct PrimitiveFormResult {
  LaurentBlock zeta;
  LaurentBlock J;
  int order = 0;
};

/// Solves e^{(F-f)/z} zeta = J order by order in s. At order k the known part
///   sum_{m=1..k} z^-m / m! * [(F-f)^m zeta_{k-m}]
/// is reduced to canonical form; its z^{>=0} part is cancelled by zeta_k and
/// its z^{<0} part is J_k.
PrimitiveFormResult solve_star(const UnfoldingState& state);
PrimitiveFormResult solve_star(const UnfoldingState& state, const Reducer& reducer);

/// The mu series J_m^alpha; m must be <= -1.
std::vector<SSeries> j_components(const PrimitiveFormResult& result, int m);

/// e^{(F-f)/z} zeta - J, recomputed from the whole zeta with the literal
/// reduction. Zero (modulo the truncation order) when the result is correct.
LaurentBlock star_defect(const UnfoldingState& state, const PrimitiveFormResult& result);

/// Terms of zeta or J that break quasi-homogeneity: with deg z = 1 and
/// deg s_alpha = 1 - d_alpha, every z^m s^a [phi_b] must have degree
/// m + deg(s^a) + d_b = 0. Returns one message per offending term.
std::vector<std::string> grading_violations(const UnfoldingState& state, const PrimitiveFormResult& result);

}  // namespace primform
