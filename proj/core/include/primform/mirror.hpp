#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "primform/matrix.hpp"
#include "primform/poly.hpp"

namespace primform {

/// W = sum_i prod_j x_j^{a_ij}, one monomial per variable, all coefficients 1.
/// Row i of the exponent matrix is the monomial paired with variable i.
class InvertiblePolynomial {
 public:
  /// Rows must form an n x n matrix with nonnegative entries, nonzero
  /// determinant, and no row equal to x_i x_j (i != j).
  InvertiblePolynomial(std::vector<std::string> variables, std::vector<std::vector<int>> exponents);

  /// Reads W from a polynomial. Coefficients are rescaled away; monomials
  /// are paired with variables by the assignment whose diagonal exponents
  /// have the largest product.
  static InvertiblePolynomial from_poly(const Poly& w, std::vector<std::string> variables);

  std::size_t size() const { return variables_.size(); }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<std::vector<int>>& exponents() const { return exponents_; }
  Matrix exponent_matrix() const;
  Poly to_poly() const;
  std::string str() const { return to_poly().str(variables_); }

 private:
  std::vector<std::string> variables_;
  std::vector<std::vector<int>> exponents_;
};

/// W^T: the exponent matrix transposed.
InvertiblePolynomial transpose(const InvertiblePolynomial& w);

/// q = E_W^{-1} (1, ..., 1). Throws Rejection when E_W is singular or a
/// weight falls outside (0, 1/2].
std::vector<Rational> weights_from_matrix(const InvertiblePolynomial& w);

/// Diagonal symmetries as phase vectors theta in [0,1)^n (lambda_j = e^{2 pi i theta_j}).
struct DiagonalSymmetryGroup {
  std::vector<std::vector<Rational>> generators;
  /// Invariant factors of the group (cyclic orders of the generators).
  std::vector<std::int64_t> cyclic_orders;
  std::int64_t order = 1;
  /// Phases of J_W, i.e. the weights modulo Z.
  std::vector<Rational> j_w;
};

/// Aut(W) = { theta : E_W theta in Z^n } / Z^n, presented by a Smith normal
/// form of E_W. Throws Rejection when E_W is singular.
DiagonalSymmetryGroup diagonal_symmetries(const InvertiblePolynomial& w);

/// theta reduced into [0, 1).
Rational fractional_part(const Rational& r);

/// True when `a` and `b` are the same polynomial after some renaming
/// (permutation) of the variables.
bool equal_up_to_permutation(const Poly& a, const Poly& b);

/// Smith normal form D = U A V of an integer matrix (U, V unimodular).
struct SmithForm {
  std::vector<std::vector<std::int64_t>> d, u, v;
};
SmithForm smith_normal_form(const std::vector<std::vector<std::int64_t>>& a);

}  // namespace primform
