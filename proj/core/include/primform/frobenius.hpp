#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "primform/matrix.hpp"
#include "primform/milnor.hpp"
#include "primform/primitive.hpp"
#include "primform/sseries.hpp"

namespace primform {

/// Outcome of one structural check. `checked` counts the identities tested.
struct CheckReport {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::vector<std::string> violations;

  void fail(std::string message) {
    passed = false;
    violations.push_back(std::move(message));
  }
};

/// t_alpha(s) = J_{-1}^alpha.
std::vector<SSeries> flat_coordinates(const PrimitiveFormResult& result);

/// f(g_1, ..., g_n) truncated at `order`; every g_i must have zero constant term.
SSeries substitute(const SSeries& f, const std::vector<SSeries>& g, int order);

/// Inverse of a coordinate change t(s) = s + O(s^2), as s(t) truncated at `order`.
/// Throws ContractViolation when the linear part is not the identity.
std::vector<SSeries> invert_coordinates(const std::vector<SSeries>& t_of_s, int order);

/// Gradient dF0/dt_alpha = sum_beta eta_{alpha beta} J_{-2}^beta(s(t)),
/// truncated at degree order - 1.
std::vector<SSeries> potential_gradient(const PrimitiveFormResult& result, const MilnorData& milnor,
                                        const std::vector<SSeries>& s_of_t);

/// d_beta G_alpha == d_alpha G_beta for every pair, exactly, in all degrees
/// the truncation determines.
CheckReport integrability_check(const std::vector<SSeries>& gradient);

/// Integrates an integrable gradient: F0 = sum_{d>=3} (1/d) sum_alpha t_alpha G_alpha^(d-1),
/// truncated at `order`. Terms of degree <= 2 are zero by normalization.
SSeries integrate_gradient(const std::vector<SSeries>& gradient, int order);

/// F0 in flat coordinates. Throws InternalError when the gradient is not
/// integrable (a convention bug, never tolerated silently).
SSeries prepotential(const PrimitiveFormResult& result, const MilnorData& milnor);

/// Degree-4 homogeneous part.
SSeries four_point_function(const SSeries& f0);

/// sum_{e,f} F_{abe} eta^{ef} F_{fcd} symmetric under b <-> c, compared in
/// every degree the truncation `order` determines (<= order - 3).
CheckReport wdvv_check(const SSeries& f0, const Matrix& eta, int order);

/// Every monomial prod t_a^{k_a} satisfies sum_a k_a deg t_a = 3 - c_hat.
CheckReport euler_check(const SSeries& f0, const std::vector<Rational>& flat_degrees, const Rational& c_hat);

/// dF0/dt_alpha agrees with the stored gradient in degrees 2..order-1.
CheckReport gradient_check(const SSeries& f0, const std::vector<SSeries>& gradient, int order);

/// Third derivatives of F0 at t = 0 equal eta(phi_a phi_b, phi_c) computed in Jac(f).
/// Vacuous when F0 is truncated below degree 3.
CheckReport origin_ring_check(const SSeries& f0, const MilnorData& milnor);

struct FrobeniusData {
  std::vector<SSeries> t_of_s;
  std::vector<SSeries> s_of_t;
  Matrix eta_flat;
  std::vector<SSeries> gradient;
  SSeries prepotential;
  std::vector<Rational> flat_degrees;
  int order = 0;
};

/// Full extraction: flat coordinates, inverse, gradient (integrability is
/// enforced), prepotential.
FrobeniusData build_frobenius(const PrimitiveFormResult& result, const MilnorData& milnor);

}  // namespace primform
