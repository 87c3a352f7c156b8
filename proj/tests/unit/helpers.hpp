#pragma once

#include <random>
#include <string>
#include <vector>

#include "primform/catalog.hpp"
#include "primform/milnor.hpp"
#include "primform/parse.hpp"

namespace primform::testing {

inline const Catalog& catalog() {
  static const Catalog c = load_catalog(PRIMFORM_TEST_CATALOG);
  return c;
}

inline const std::vector<std::string>& exceptional_names() {
  static const std::vector<std::string> names = {"E12", "E13", "E14", "Z11", "Z12", "Z13", "W12",
                                                 "W13", "Q10", "Q11", "Q12", "S11", "S12", "U12"};
  return names;
}

inline WeightedPolynomial weighted(const std::string& name) { return catalog().find(name).weighted(); }

inline MilnorData milnor(const std::string& name) { return MilnorData::compute(weighted(name)); }

inline WeightedPolynomial make(const std::string& text, const std::string& weights) {
  auto vars = detect_variables(text);
  return WeightedPolynomial(vars, parse_rational_list(weights), parse_poly(text, vars));
}

inline const char* kU12Basis = "1,z,x,y,z^2,x*z,y*z,x*y,x*z^2,y*z^2,x*y*z,x*y*z^2";

inline Rational random_rational(std::mt19937& rng, int span = 9) {
  std::uniform_int_distribution<int> num(-span, span), den(1, span);
  return Rational(num(rng), den(rng));
}

/// Random polynomial with terms of total degree <= max_degree.
inline Poly random_poly(std::mt19937& rng, std::size_t nvars, int max_degree, int terms) {
  Poly p(nvars);
  std::uniform_int_distribution<int> deg(0, max_degree);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(nvars, 0);
    int budget = deg(rng);
    for (std::size_t i = 0; i < nvars && budget > 0; ++i) {
      std::uniform_int_distribution<int> take(0, budget);
      e[i] = i + 1 == nvars ? budget : take(rng);
      budget -= e[i];
    }
    p.add_term(Monomial(e), random_rational(rng));
  }
  return p;
}

/// Random weighted homogeneous polynomial of scaled degree d.
inline Poly random_homogeneous(std::mt19937& rng, const Grading& g, long d, int terms) {
  const auto monos = monomials_of_degree(g, d);
  Poly p(g.w.size());
  if (monos.empty()) return p;
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  for (int t = 0; t < terms; ++t) p.add_term(monos[pick(rng)], random_rational(rng));
  return p;
}

}  // namespace primform::testing
