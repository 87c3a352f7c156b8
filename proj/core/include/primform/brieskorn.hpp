#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "primform/laurent.hpp"
#include "primform/milnor.hpp"
#include "primform/series_poly.hpp"

namespace primform {

// Forms are reduced in the lattice model Omega^n((z)) / (df + z d) Omega^{n-1}.
// With eta = sum_i (-1)^(i-1) h_i dx_1..^dx_i..dx_n the relation reads
//   [sum_i h_i d_i f  d^n x] = -z [sum_i d_i h_i  d^n x],
// and every class has a unique expansion sum_m z^m sum_a c_{m,a} [phi_a d^n x].

/// Canonical class of a form: a LaurentBlock over the basis of Jac(f).
using FormClass = LaurentBlock;

/// One entry z^z_power * coeff * [phi_basis d^n x] of a scalar class.
struct ClassTerm {
  int z_power;
  std::size_t basis;
  Rational coeff;
  friend bool operator==(const ClassTerm&, const ClassTerm&) = default;
};
/// Class of a polynomial with rational coefficients, sorted by (z_power, basis).
using ScalarClass = std::vector<ClassTerm>;

/// Reduces g d^n x by the literal recursion: split g by divide_by_jacobian,
/// emit the basis part at the current z-power, continue with -sum_i d_i h_i
/// one z-power higher. Terminates since each step lowers weighted degree by 1.
FormClass reduce(const SeriesPoly& g, const MilnorData& data);
ScalarClass reduce(const Poly& g, const MilnorData& data);

/// Same classes as `reduce`, computed through a per-monomial cache of
/// reduced classes. This is the path the primitive-form solver uses.
class Reducer {
 public:
  explicit Reducer(MilnorData data);

  const MilnorData& milnor() const { return data_; }
  const ScalarClass& reduce_monomial(const Monomial& m) const;
  FormClass reduce(const SeriesPoly& g) const;
  ScalarClass reduce(const Poly& g) const;
  std::size_t cache_size() const;

 private:
  MilnorData data_;
  mutable std::mutex mutex_;
  mutable std::map<Monomial, ScalarClass, GrlexLess> cache_;
};

/// Checks that the class of df ^ eta + z d eta vanishes, eta given by its
/// contraction coefficients h (one polynomial per variable).
bool verify_exact_class(const std::vector<Poly>& h, const MilnorData& data);

/// Drops zero entries and merges duplicates.
ScalarClass canonical(ScalarClass c);

}  // namespace primform
