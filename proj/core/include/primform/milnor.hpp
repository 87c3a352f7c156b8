#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "primform/matrix.hpp"
#include "primform/poly.hpp"
#include "primform/weighted.hpp"

namespace primform {

/// g = sum_alpha coeffs[alpha] phi_alpha + sum_i quotients[i] * d_i f.
struct JacobianDivision {
  std::vector<Rational> coeffs;
  std::vector<Poly> quotients;
};

/// Division witness of a single monomial; basis coefficients kept sparse.
struct MonomialDivision {
  std::vector<std::pair<std::size_t, Rational>> coeffs;
  std::vector<Poly> quotients;
};

/// Jacobian (Milnor) algebra of a weighted homogeneous f: graded monomial
/// basis, socle, residue pairing, and exact division by the Jacobian ideal.
///
/// Division witnesses are solved one weighted degree at a time as an exact
/// linear system whose columns are monomials and whose rows are the
/// generators u * d_i f. Within a degree, elimination pivots on the
/// graded-lex smallest monomial first, and the monomials left without a
/// pivot are the basis monomials of that degree. Witnesses for degrees above
/// the precomputed range are derived from lower ones and cached; the cache is
/// internally synchronized and copies of a MilnorData share it.
class MilnorData {
 public:
  /// Throws Rejection for a non-isolated singularity, or when an explicit
  /// `basis` is not a basis of the Jacobian algebra.
  static MilnorData compute(const WeightedPolynomial& f,
                            const std::optional<std::vector<Monomial>>& basis = std::nullopt);

  const WeightedPolynomial& polynomial() const;
  std::size_t mu() const;
  std::size_t nvars() const;
  const std::vector<Monomial>& basis() const;
  /// Weighted degrees d_alpha of the basis monomials.
  const std::vector<Rational>& degrees() const;
  /// The same degrees in units of 1/grading().unit.
  const std::vector<long>& scaled_degrees() const;
  const Grading& grading() const;
  Rational central_charge() const;
  std::size_t socle_index() const;
  const Monomial& socle() const;
  /// Index of the basis monomial 1 (the class [d^n x]).
  std::size_t unit_index() const;
  std::optional<std::size_t> basis_index(const Monomial& m) const;
  /// d_i f for each variable.
  const std::vector<Poly>& jacobian() const;

  /// Residue pairing, normalized so the residue of the Hessian is mu.
  const Matrix& eta() const;
  const Matrix& eta_inverse() const;

  const MonomialDivision& divide_monomial(const Monomial& m) const;
  JacobianDivision divide(const Poly& g) const;
  /// Basis coefficients of the class of g in Jac(f).
  std::vector<Rational> normal_form(const Poly& g) const;

 private:
  struct State;
  explicit MilnorData(std::shared_ptr<State> state) : state_(std::move(state)) {}
  std::shared_ptr<State> state_;
};

MilnorData milnor_basis(const WeightedPolynomial& f,
                        const std::optional<std::vector<Monomial>>& basis = std::nullopt);

JacobianDivision divide_by_jacobian(const Poly& g, const MilnorData& data);

/// eta_{ab} = r_ab * mu / h where phi_a phi_b = r_ab socle and hess f = h socle
/// in Jac(f).
Matrix residue_pairing(const MilnorData& data, const WeightedPolynomial& f);

/// All monomials in `nvars` variables with scaled weighted degree exactly d.
std::vector<Monomial> monomials_of_degree(const Grading& g, long d);

/// Ordering used for the default basis: weighted degree, then total degree,
/// then earlier variables first (x before y).
bool basis_order_less(const Grading& g, const Monomial& a, const Monomial& b);

}  // namespace primform
