#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "primform/error.hpp"
#include "primform/primitive.hpp"
#include "primform/serialize.hpp"

using namespace primform;
using namespace primform::testing;

namespace {

PrimitiveFormResult solve(const std::string& name, int order) {
  const auto f = weighted(name);
  const MilnorData md = MilnorData::compute(f);
  return solve_star(build_unfolding(f, md, order));
}

}  // namespace

TEST(BuildUnfolding, A1) {
  const auto f = weighted("A1");
  const auto st = build_unfolding(f, MilnorData::compute(f), 3);
  EXPECT_EQ(st.s_degrees, std::vector<Rational>{Rational(1)});
  SeriesPoly expected(1, 1, 3);
  expected.add_term(Monomial({0}), Monomial({1}), Rational(1));
  EXPECT_EQ(st.deformation, expected);
}

TEST(BuildUnfolding, U12ParameterDegrees) {
  const auto f = weighted("U12");
  const auto md = MilnorData::compute(f, parse_monomial_list(kU12Basis, f.variables()));
  const auto st = build_unfolding(f, md, 2);
  ASSERT_EQ(st.s_degrees.size(), 12u);
  EXPECT_EQ(st.s_degrees.front(), Rational(1));
  EXPECT_EQ(st.s_degrees.back(), Rational(-1, 6));
}

TEST(BuildUnfolding, ExactlyOneNegativeNoZeroDegree) {
  for (const auto& name : exceptional_names()) {
    const auto f = weighted(name);
    const auto st = build_unfolding(f, MilnorData::compute(f), 1);
    int negative = 0, zero = 0;
    for (const auto& d : st.s_degrees) {
      negative += d.sign() < 0;
      zero += d.is_zero();
    }
    EXPECT_EQ(negative, 1) << name;
    EXPECT_EQ(zero, 0) << name;
  }
}

TEST(BuildUnfolding, NegativeOrderIsContractViolation) {
  const auto f = weighted("A2");
  EXPECT_THROW(build_unfolding(f, MilnorData::compute(f), -1), ContractViolation);
}

TEST(SolveStar, OrderZeroIsNormalization) {
  for (const auto& name : {"A1", "U12"}) {
    const auto r = solve(name, 0);
    const auto md = milnor(name);
    LaurentBlock unit(md.mu(), md.mu(), 0);
    unit.add(0, md.unit_index(), SSeries::constant(md.mu(), 0, Rational(1)));
    EXPECT_EQ(r.zeta, unit);
    EXPECT_EQ(r.J, unit);
  }
}

TEST(SolveStar, A2OrderOne) {
  const auto r = solve("A2", 1);
  EXPECT_EQ(r.zeta.s_homogeneous_part(1).z_terms().size(), 0u);
  const auto j1 = j_components(r, -1);
  EXPECT_EQ(j1[0], SSeries::variable(2, 1, 0));
  EXPECT_EQ(j1[1], SSeries::variable(2, 1, 1));
}

TEST(SolveStar, A2ZetaStaysTrivial) {
  // Grading leaves no room for a z^{>0} correction when f = x^3.
  const auto r = solve("A2", 6);
  EXPECT_EQ(r.zeta.z_terms().size(), 1u);
  EXPECT_EQ(r.zeta.component(0, 0), SSeries::constant(2, 6, Rational(1)));
}

TEST(SolveStar, ZetaTrivialWhenAllParameterDegreesPositive) {
  for (const auto& name : {"A1", "A3", "A4", "D4"}) {
    const auto r = solve(name, 5);
    EXPECT_EQ(r.zeta.z_terms().size(), 1u) << name;
    EXPECT_EQ(r.zeta.row(0)[0].size(), 1u) << name;
  }
}

TEST(SolveStar, ZetaGetsCorrectionsForExceptional) {
  const auto r = solve("U12", 4);
  std::size_t terms = 0;
  for (const auto& [m, row] : r.zeta.z_terms())
    for (const auto& s : row) terms += s.size();
  EXPECT_GT(terms, 1u);
}

TEST(JComponents, LeadingTermIsParameter) {
  for (const auto& e : catalog().entries()) {
    const auto r = solve(e.name, 2);
    const auto j1 = j_components(r, -1);
    for (std::size_t a = 0; a < j1.size(); ++a) {
      SSeries lin = j1[a].homogeneous_part(1);
      EXPECT_EQ(lin, SSeries::variable(j1.size(), 2, a)) << e.name;
      EXPECT_TRUE(j1[a].homogeneous_part(0).is_zero());
    }
    for (const auto& c : j_components(r, -2)) EXPECT_TRUE(c.homogeneous_part(1).is_zero()) << e.name;
  }
}

TEST(JComponents, RejectsNonNegativePower) {
  const auto r = solve("A2", 2);
  EXPECT_THROW(j_components(r, 0), ContractViolation);
  EXPECT_THROW(j_components(r, 3), ContractViolation);
}

TEST(SolveStar, JHasOnlyNormalizedZeroPower) {
  const auto r = solve("Q10", 4);
  EXPECT_LE(r.J.max_z(), 0);
  const auto md = milnor("Q10");
  for (std::size_t a = 0; a < md.mu(); ++a)
    EXPECT_EQ(r.J.component(0, a), SSeries::constant(md.mu(), 4, Rational(a == md.unit_index() ? 1 : 0)));
  EXPECT_GE(r.zeta.min_z(), 0);
}

TEST(SolveStar, DefectVanishesForCatalogAtOrderFour) {
  for (const auto& e : catalog().entries()) {
    const auto f = e.weighted();
    const auto md = MilnorData::compute(f);
    const auto st = build_unfolding(f, md, 4);
    const auto r = solve_star(st);
    EXPECT_TRUE(star_defect(st, r).is_zero()) << e.name;
  }
}

TEST(StarDefect, DetectsCorruption) {
  const auto f = weighted("E12");
  const auto md = MilnorData::compute(f);
  const auto st = build_unfolding(f, md, 3);
  auto r = solve_star(st);
  r.J.add(-1, 2, Monomial(std::vector<int>(md.mu(), 0)).raised(1, 2), Rational(1));
  EXPECT_FALSE(star_defect(st, r).is_zero());
}

TEST(SolveStar, TruncationStability) {
  for (const auto& name : {"A4", "D4", "P8", "S12"}) {
    const auto big = solve(name, 4), small = solve(name, 3);
    EXPECT_EQ(big.zeta.truncated(3), small.zeta) << name;
    EXPECT_EQ(big.J.truncated(3), small.J) << name;
  }
}

TEST(SolveStar, Deterministic) {
  const auto a = to_json(solve("Z13", 3)).dump();
  const auto b = to_json(solve("Z13", 3)).dump();
  EXPECT_EQ(a, b);
}

TEST(SolveStar, CachedAndLiteralReducersAgree) {
  const auto f = weighted("W13");
  const auto md = MilnorData::compute(f);
  const auto st = build_unfolding(f, md, 3);
  const Reducer reducer(md);
  const auto a = solve_star(st, reducer);
  const auto b = solve_star(st);
  EXPECT_EQ(a.zeta, b.zeta);
  EXPECT_EQ(a.J, b.J);
}

TEST(GradingPredicate, RandomizedRuns) {
  // Random entry, random order, random admissible basis permutation.
  std::mt19937 rng(1234);
  const auto& entries = catalog().entries();
  std::uniform_int_distribution<std::size_t> pick(0, entries.size() - 1);
  std::uniform_int_distribution<int> order(0, 3);
  int cases = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto& e = entries[pick(rng)];
    const auto f = e.weighted();
    auto basis = MilnorData::compute(f).basis();
    std::shuffle(basis.begin(), basis.end(), rng);
    const auto md = MilnorData::compute(f, basis);
    const auto st = build_unfolding(f, md, order(rng));
    const auto r = solve_star(st);
    const auto bad = grading_violations(st, r);
    ASSERT_TRUE(bad.empty()) << e.name << ": " << bad.front();
    ++cases;
  }
  EXPECT_GE(cases, 1000);
}

TEST(GradingPredicate, CatchesMisplacedTerm) {
  const auto f = weighted("U12");
  const auto md = MilnorData::compute(f);
  const auto st = build_unfolding(f, md, 2);
  auto r = solve_star(st);
  r.J.add(-1, 0, Monomial(std::vector<int>(md.mu(), 0)).raised(3, 2), Rational(1));
  EXPECT_FALSE(grading_violations(st, r).empty());
}
