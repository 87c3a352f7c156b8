#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "primform/brieskorn.hpp"

using namespace primform;
using namespace primform::testing;

namespace {

ScalarClass scalar(std::initializer_list<ClassTerm> terms) { return ScalarClass(terms); }

ScalarClass combine(const ScalarClass& a, const Rational& ca, const ScalarClass& b, const Rational& cb) {
  ScalarClass out;
  for (const auto& t : a) out.push_back({t.z_power, t.basis, t.coeff * ca});
  for (const auto& t : b) out.push_back({t.z_power, t.basis, t.coeff * cb});
  return canonical(out);
}

}  // namespace

TEST(Reduce, BasisClassIsItself) {
  const MilnorData md = milnor("U12");
  for (std::size_t a = 0; a < md.mu(); ++a)
    EXPECT_EQ(reduce(Poly::monomial(md.basis()[a]), md), scalar({{0, a, Rational(1)}}));
}

TEST(Reduce, A2SquareVanishes) {
  const MilnorData md = milnor("A2");
  EXPECT_TRUE(reduce(parse_poly("x^2", {"x"}), md).empty());
}

TEST(Reduce, A2CubeIsMinusZThird) {
  const MilnorData md = milnor("A2");
  EXPECT_EQ(reduce(parse_poly("x^3", {"x"}), md), scalar({{1, md.unit_index(), Rational(-1, 3)}}));
}

TEST(Reduce, CachedPathAgreesWithLiteral) {
  std::mt19937 rng(5);
  for (const auto& name : exceptional_names()) {
    const MilnorData md = milnor(name);
    const Reducer reducer(md);
    for (int i = 0; i < 20; ++i) {
      const Poly g = random_poly(rng, md.nvars(), 9, 5);
      ASSERT_EQ(reducer.reduce(g), reduce(g, md)) << name;
    }
  }
}

TEST(Reduce, SeriesCoefficientsCommute) {
  const MilnorData md = milnor("A3");
  SeriesPoly g(1, 2, 2);
  g.add_term(Monomial({5}), Monomial({1, 0}), Rational(2));
  g.add_term(Monomial({3}), Monomial({0, 1}), Rational(1));
  const FormClass c = reduce(g, md);
  const ScalarClass x5 = reduce(parse_poly("x^5", {"x"}), md);
  const ScalarClass x3 = reduce(parse_poly("x^3", {"x"}), md);
  LaurentBlock expected(3, 2, 2);
  for (const auto& t : x5) expected.add(t.z_power, t.basis, Monomial({1, 0}), t.coeff * Rational(2));
  for (const auto& t : x3) expected.add(t.z_power, t.basis, Monomial({0, 1}), t.coeff);
  EXPECT_EQ(c, expected);
}

TEST(Reduce, Linearity) {
  std::mt19937 rng(17);
  for (int i = 0; i < 200; ++i) {
    const auto& name = exceptional_names()[i % exceptional_names().size()];
    const MilnorData md = milnor(name);
    const Poly g1 = random_poly(rng, md.nvars(), 8, 4), g2 = random_poly(rng, md.nvars(), 8, 4);
    const Rational a = random_rational(rng), b = random_rational(rng);
    ASSERT_EQ(reduce(g1 * a + g2 * b, md), combine(reduce(g1, md), a, reduce(g2, md), b)) << name;
  }
}

TEST(Reduce, ZPositivityAndGrading) {
  std::mt19937 rng(23);
  for (int i = 0; i < 300; ++i) {
    const auto& e = catalog().entries()[i % catalog().entries().size()];
    const MilnorData md = MilnorData::compute(e.weighted());
    const Grading& g = md.grading();
    std::uniform_int_distribution<long> pick(0, 4 * g.unit);
    const long d = pick(rng);
    const Poly p = random_homogeneous(rng, g, d, 3);
    for (const auto& t : reduce(p, md)) {
      ASSERT_GE(t.z_power, 0) << e.name;
      ASSERT_EQ(md.scaled_degrees()[t.basis], d - t.z_power * g.unit) << e.name;
    }
  }
}

TEST(VerifyExactClass, ZeroForm) { EXPECT_TRUE(verify_exact_class({Poly(1)}, milnor("A2"))); }

TEST(VerifyExactClass, A2HandCase) { EXPECT_TRUE(verify_exact_class({parse_poly("x", {"x"})}, milnor("A2"))); }

TEST(VerifyExactClass, RandomFormsAnnihilated) {
  std::mt19937 rng(42);
  int cases = 0;
  for (int i = 0; i < 1400; ++i) {
    const auto& name = exceptional_names()[i % exceptional_names().size()];
    const MilnorData md = milnor(name);
    std::vector<Poly> h;
    for (std::size_t k = 0; k < md.nvars(); ++k) h.push_back(random_poly(rng, md.nvars(), 4, 3));
    ASSERT_TRUE(verify_exact_class(h, md)) << name << " case " << i;
    ++cases;
  }
  EXPECT_GE(cases, 1000);
}

TEST(VerifyExactClass, U12DegreeThree) {
  std::mt19937 rng(3);
  const MilnorData md = milnor("U12");
  for (int i = 0; i < 50; ++i) {
    std::vector<Poly> h;
    for (int k = 0; k < 3; ++k) h.push_back(random_poly(rng, 3, 3, 4));
    EXPECT_TRUE(verify_exact_class(h, md));
  }
}
