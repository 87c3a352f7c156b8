#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "primform/error.hpp"
#include "primform/milnor.hpp"

using namespace primform;
using namespace primform::testing;

namespace {

using IntPoly = std::vector<long>;

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

IntPoly one_minus(long k) {
  IntPoly p(k + 1, 0);
  p[0] = 1;
  p[k] -= 1;
  return p;
}

/// prod_i (1 - u^{unit - w_i}) / (1 - u^{w_i}) by exact long division.
IntPoly poincare(const Grading& g) {
  IntPoly num{1}, den{1};
  for (long w : g.w) {
    num = mul(num, one_minus(g.unit - w));
    den = mul(den, one_minus(w));
  }
  IntPoly q(num.size(), 0);
  for (std::size_t i = 0; i < num.size(); ++i) {
    q[i] = num[i];  // den[0] == 1
    for (std::size_t j = 1; j < den.size() && i + j < num.size(); ++j) num[i + j] -= q[i] * den[j];
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
  return q;
}

Poly reconstruct(const MilnorData& md, const JacobianDivision& d) {
  Poly r(md.nvars());
  for (std::size_t a = 0; a < md.mu(); ++a)
    if (!d.coeffs[a].is_zero()) r.add_term(md.basis()[a], d.coeffs[a]);
  for (std::size_t i = 0; i < md.nvars(); ++i) r += d.quotients[i] * md.jacobian()[i];
  return r;
}

}  // namespace

TEST(CentralCharge, Examples) {
  EXPECT_EQ(central_charge(weighted("E12")), Rational(22, 21));
  EXPECT_EQ(central_charge(weighted("U12")), Rational(7, 6));
  EXPECT_EQ(central_charge(weighted("A1")), Rational(0));
}

TEST(WeightedPolynomial, RejectsInconsistentWeights) {
  EXPECT_THROW(make("x^3+y^3", "1/3,1/4"), Rejection);
  EXPECT_THROW(make("x^3", "2/3"), Rejection);
  EXPECT_THROW(make("x", "1"), Rejection);
}

TEST(InferWeights, UniqueSolutions) {
  const std::vector<std::string> xyz = {"x", "y", "z"};
  auto q = infer_weights(parse_poly("x^2*y+y^2*z+z^3*x", xyz));
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, (std::vector<Rational>{Rational(4, 13), Rational(5, 13), Rational(3, 13)}));
  EXPECT_FALSE(infer_weights(parse_poly("x^2*y", {"x", "y"})).has_value());
}

TEST(MilnorBasis, U12WithDefaultOrder) {
  const MilnorData md = milnor("U12");
  const auto expected = parse_monomial_list(kU12Basis, {"x", "y", "z"});
  EXPECT_EQ(md.mu(), 12u);
  EXPECT_EQ(md.basis(), expected);
  EXPECT_EQ(md.socle(), parse_monomial_list("x*y*z^2", {"x", "y", "z"})[0]);
}

TEST(MilnorBasis, A1) {
  const MilnorData md = milnor("A1");
  EXPECT_EQ(md.mu(), 1u);
  EXPECT_TRUE(md.basis()[0].is_one());
}

TEST(MilnorBasis, E12DimensionFromReduction) { EXPECT_EQ(milnor("E12").mu(), 12u); }

TEST(MilnorBasis, MuEqualsSubscriptForExceptionalFamily) {
  for (const auto& name : exceptional_names()) {
    const long subscript = std::stol(name.substr(1));
    EXPECT_EQ(static_cast<long>(milnor(name).mu()), subscript) << name;
  }
}

TEST(MilnorBasis, SocleDegreeIsCentralCharge) {
  for (const auto& e : catalog().entries()) {
    const MilnorData md = MilnorData::compute(e.weighted());
    EXPECT_EQ(md.degrees()[md.socle_index()], md.central_charge()) << e.name;
    for (const auto& d : md.degrees()) EXPECT_LE(d, md.central_charge()) << e.name;
  }
}

TEST(MilnorBasis, PoincarePolynomialMatchesProductFormula) {
  for (const auto& e : catalog().entries()) {
    const MilnorData md = MilnorData::compute(e.weighted());
    IntPoly hist;
    for (long d : md.scaled_degrees()) {
      if (hist.size() <= static_cast<std::size_t>(d)) hist.resize(d + 1, 0);
      ++hist[d];
    }
    EXPECT_EQ(hist, poincare(md.grading())) << e.name;
  }
}

TEST(MilnorBasis, RejectsNonIsolated) {
  try {
    MilnorData::compute(make("x^2*y", "1/4,1/2"));
    FAIL() << "expected a rejection";
  } catch (const Rejection& e) {
    EXPECT_NE(std::string(e.what()).find("not isolated"), std::string::npos) << e.what();
  }
}

TEST(MilnorBasis, ExplicitBasisValidation) {
  const auto f = weighted("U12");
  const std::vector<std::string> v = {"x", "y", "z"};
  EXPECT_NO_THROW(MilnorData::compute(f, parse_monomial_list(kU12Basis, v)));
  EXPECT_THROW(MilnorData::compute(f, parse_monomial_list("1,z,x,y", v)), Rejection);
  EXPECT_THROW(
      MilnorData::compute(f, parse_monomial_list("1,z,x,y,z^2,x*z,y*z,x*y,x*z^2,y*z^2,x*y*z,x^2", v)), Rejection);
  EXPECT_THROW(
      MilnorData::compute(f, parse_monomial_list("1,z,x,y,z^2,x*z,y*z,x*y,x*z^2,y*z^2,x*y*z,z^3", v)), Rejection);
}

TEST(MilnorBasis, AlternativeBasisIsAccepted) {
  const auto f = weighted("D4");
  const std::vector<std::string> v = {"x", "y"};
  for (const char* top : {"x^2", "y^2"}) {
    const auto md = MilnorData::compute(f, parse_monomial_list(std::string("1,x,y,") + top, v));
    EXPECT_EQ(md.socle().str(v), top);
  }
}

TEST(DivideByJacobian, BasisElementIsItsOwnClass) {
  const MilnorData md = milnor("U12");
  for (std::size_t a = 0; a < md.mu(); ++a) {
    const auto d = md.divide(Poly::monomial(md.basis()[a]));
    for (std::size_t b = 0; b < md.mu(); ++b) EXPECT_EQ(d.coeffs[b], Rational(a == b ? 1 : 0));
    for (const auto& q : d.quotients) EXPECT_TRUE(q.is_zero());
  }
}

TEST(DivideByJacobian, A2Square) {
  const MilnorData md = milnor("A2");
  const auto d = md.divide(parse_poly("x^2", {"x"}));
  EXPECT_TRUE(d.coeffs[0].is_zero());
  EXPECT_TRUE(d.coeffs[1].is_zero());
  EXPECT_EQ(d.quotients[0], Poly::constant(1, Rational(1, 3)));
}

TEST(DivideByJacobian, E12WitnessReconstructs) {
  const MilnorData md = milnor("E12");
  const Poly g = parse_poly("x^2*y^6", {"x", "y"});
  const auto d = md.divide(g);
  for (const auto& c : d.coeffs) EXPECT_TRUE(c.is_zero());
  EXPECT_EQ(reconstruct(md, d), g);
}

TEST(DivideByJacobian, RandomReconstructionAndGrading) {
  std::mt19937 rng(314);
  int cases = 0;
  for (int round = 0; round < 1000; ++round) {
    const auto& e = catalog().entries()[round % catalog().entries().size()];
    const MilnorData md = MilnorData::compute(e.weighted());
    const Grading& g = md.grading();
    const long max_d = md.scaled_degrees()[md.socle_index()] + 2 * g.unit;
    std::uniform_int_distribution<long> pick(0, max_d);
    const long d = pick(rng);
    const Poly p = random_homogeneous(rng, g, d, 4);
    const auto div = md.divide(p);
    ASSERT_EQ(reconstruct(md, div), p) << e.name;
    for (std::size_t a = 0; a < md.mu(); ++a)
      if (!div.coeffs[a].is_zero()) {
        ASSERT_EQ(md.scaled_degrees()[a], d);
      }
    for (std::size_t i = 0; i < md.nvars(); ++i)
      for (const auto& [m, c] : div.quotients[i].terms()) ASSERT_EQ(g.degree(m), d - (g.unit - g.w[i]));
    // Idempotence on the basis part.
    Poly normal(md.nvars());
    for (std::size_t a = 0; a < md.mu(); ++a)
      if (!div.coeffs[a].is_zero()) normal.add_term(md.basis()[a], div.coeffs[a]);
    const auto again = md.divide(normal);
    ASSERT_EQ(again.coeffs, div.coeffs);
    for (const auto& q : again.quotients) ASSERT_TRUE(q.is_zero());
    ++cases;
  }
  EXPECT_GE(cases, 1000);
}

TEST(ResiduePairing, A1) {
  const MilnorData md = milnor("A1");
  EXPECT_EQ(md.eta()(0, 0), Rational(1, 2));
}

TEST(ResiduePairing, U12UnitPairsOnlyWithSocle) {
  const MilnorData md = milnor("U12");
  const std::size_t one = md.unit_index();
  for (std::size_t b = 0; b < md.mu(); ++b) {
    if (b == md.socle_index())
      EXPECT_FALSE(md.eta()(one, b).is_zero());
    else
      EXPECT_TRUE(md.eta()(one, b).is_zero());
  }
  EXPECT_EQ(md.eta()(one, md.socle_index()), Rational(1, 36));
}

TEST(ResiduePairing, GradedSymmetricNondegenerate) {
  for (const auto& e : catalog().entries()) {
    const MilnorData md = MilnorData::compute(e.weighted());
    const Matrix& eta = md.eta();
    EXPECT_TRUE(eta.is_symmetric()) << e.name;
    EXPECT_FALSE(eta.determinant().is_zero()) << e.name;
    for (std::size_t a = 0; a < md.mu(); ++a)
      for (std::size_t b = 0; b < md.mu(); ++b)
        if (!eta(a, b).is_zero()) {
          EXPECT_EQ(md.degrees()[a] + md.degrees()[b], md.central_charge()) << e.name;
        }
  }
}

TEST(ResiduePairing, HessianHasResidueMu) {
  for (const auto& e : catalog().entries()) {
    const auto f = e.weighted();
    const MilnorData md = MilnorData::compute(f);
    std::vector<std::vector<Poly>> h(f.nvars(), std::vector<Poly>(f.nvars()));
    for (std::size_t i = 0; i < f.nvars(); ++i)
      for (std::size_t j = 0; j < f.nvars(); ++j) h[i][j] = f.poly().derivative(i).derivative(j);
    const auto nf = md.normal_form(determinant(h));
    // eta(1, hess) = mu
    const Rational res = nf[md.socle_index()] * md.eta()(md.unit_index(), md.socle_index());
    EXPECT_EQ(res, Rational(static_cast<long>(md.mu()))) << e.name;
  }
}
