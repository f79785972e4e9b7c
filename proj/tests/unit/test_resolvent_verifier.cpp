#include <gtest/gtest.h>

#include <random>

#include "octic/doubly_even.hpp"
#include "octic/octic_irred.hpp"
#include "octic/palindromic.hpp"
#include "octic/resolvent_verifier.hpp"
#include "oracles.hpp"

using octic::FactorPattern;
using octic::GroupId;
using octic::Rational;
using octic::UniPoly;

TEST(LinearResolvent, DoublyEvenExample) {
  const UniPoly f = octic::doubly_even_octic(1, 4);
  const UniPoly R = octic::linear_resolvent(f);
  EXPECT_EQ(R.degree(), 28);
  const UniPoly want = UniPoly::monomial(1, 4) * octic::compose_power(UniPoly{9, 0, 26, 0, 1}, 2) *
                       octic::compose_power(UniPoly{25, 0, -22, 0, 1}, 2) *
                       octic::compose_power(UniPoly{64, 0, -4, 0, 1}, 2);
  EXPECT_EQ(R, want);
}

TEST(LinearResolvent, PalindromicExample) {
  const UniPoly R = octic::linear_resolvent(octic::palindromic_octic(-3, 8));
  const UniPoly want =
      UniPoly::monomial(1, 4) * octic::palindromic::build_R16(-3, 8) * UniPoly{16, 0, -7, 0, 1} * UniPoly{4, 0, 1, 0, 1};
  EXPECT_EQ(R, want);
}

TEST(LinearResolvent, IdentityAtFreshPointsForRandomOctics) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 6; ++i) {
    UniPoly f = oracle::random_poly(rng, 8, 5, true);
    if (f.coeff(0).is_zero()) f += UniPoly{1};
    const UniPoly R = octic::linear_resolvent(f);
    ASSERT_EQ(R.degree(), 28);
    for (const Rational x0 : {Rational(71), Rational(-2, 3)}) ASSERT_TRUE(oracle::resolvent_identity_at(f, R, x0));
  }
}

TEST(LinearResolvent, Preconditions) {
  EXPECT_THROW(octic::linear_resolvent(UniPoly{1, 0, 1}), octic::PreconditionError);
  EXPECT_THROW(octic::linear_resolvent(UniPoly{0, 1, 0, 0, 0, 0, 0, 0, 1}), octic::PreconditionError);
  EXPECT_THROW(octic::linear_resolvent(UniPoly{1, 0, 0, 0, 0, 0, 0, 0, 2}), octic::PreconditionError);
}

TEST(SubsetFactorization, SpecExamples) {
  const UniPoly q1{13, 0, -7, 0, 1};
  EXPECT_EQ(octic::subset_factorization(q1).degrees, std::vector<int>{4});
  EXPECT_EQ(octic::subset_factorization(octic::palindromic::build_R16(1, -1)).degrees, std::vector<int>{16});
  const UniPoly q2{1, 0, 1, 0, 1};
  const FactorPattern p = octic::subset_factorization(q2 * q1);
  EXPECT_EQ(p.degrees, (std::vector<int>{2, 2, 4}));
  EXPECT_EQ(p.factors[0], (UniPoly{1, -1, 1}));
  EXPECT_EQ(p.factors[1], (UniPoly{1, 1, 1}));
  EXPECT_EQ(p.factors[2], q1);
}

TEST(SubsetFactorization, Preconditions) {
  EXPECT_THROW(octic::subset_factorization(UniPoly{1, 2, 1}), octic::PreconditionError);
  EXPECT_THROW(octic::subset_factorization(UniPoly::monomial(1, 17) + UniPoly{1}, 20), octic::PreconditionError);
  EXPECT_THROW(octic::subset_factorization(UniPoly::monomial(1, 9) + UniPoly{1}, 8), octic::PreconditionError);
  EXPECT_THROW(octic::subset_factorization(UniPoly{3}), octic::PreconditionError);
}

TEST(SubsetFactorization, ReconstructsKnownProducts) {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 40; ++i) {
    std::vector<UniPoly> parts;
    int degree = 0;
    while (degree < 10) {
      const int d = 1 + static_cast<int>(rng() % 4);
      UniPoly g = oracle::random_poly(rng, d, 6, rng() % 3 != 0);
      parts.push_back(g);
      degree += d;
    }
    const UniPoly p = octic::product(parts);
    if (p.degree() > 16 || !octic::is_squarefree(p)) continue;
    const FactorPattern f = octic::subset_factorization(p);
    UniPoly back = octic::product(f.factors);
    ASSERT_EQ(octic::exact_divide(p, back).degree(), 0);
    int sum = 0;
    for (int d : f.degrees) sum += d;
    ASSERT_EQ(sum, p.degree());
    ASSERT_GE(f.factors.size(), 1u);
    for (const UniPoly& g : f.factors) {
      ASSERT_TRUE(g.is_monic());
      if (g.degree() == 4) ASSERT_TRUE(octic::quartic_irreducible(g));
      if (g.degree() >= 2) ASSERT_TRUE(octic::rational_roots(g).empty());
    }
  }
}

TEST(SubsetFactorization, IndependentOfStartingPrecision) {
  const UniPoly p = octic::palindromic::build_R16(1, -3);
  const FactorPattern low = octic::subset_factorization(p, 16, {40, 9});
  const FactorPattern high = octic::subset_factorization(p, 16, {400, 3});
  EXPECT_EQ(low.degrees, (std::vector<int>{4, 4, 8}));
  EXPECT_EQ(low.degrees, high.degrees);
  EXPECT_EQ(low.factors, high.factors);
}

TEST(SubsetFactorization, CapExceededRaises) {
  // Ten digits cannot separate the roots of a degree-16 polynomial with large coefficients.
  const UniPoly p = octic::palindromic::build_R16(24, 48);
  EXPECT_THROW(octic::subset_factorization(p, 16, {4, 0}), octic::PrecisionError);
}

TEST(VerifyDoublyEven, SpecExamples) {
  auto r = octic::verify_doubly_even(1, 4);
  EXPECT_TRUE(r.ok()) << r.first_failure();
  EXPECT_EQ(r.observed_pattern, (octic::OrbitPattern{4, 8, 8, 8}));
  r = octic::verify_doubly_even(2, 4);
  EXPECT_TRUE(r.ok()) << r.first_failure();
  EXPECT_EQ(r.observed_pattern, (octic::OrbitPattern{4, 4, 4, 8, 8}));
  r = octic::verify_doubly_even(-1, 1);
  EXPECT_TRUE(r.ok()) << r.first_failure();
  EXPECT_EQ(r.observed_pattern, (octic::OrbitPattern(7, 4)));
}

TEST(VerifyPalindromic, SpecExamples) {
  auto r = octic::verify_palindromic(2, -7);
  EXPECT_TRUE(r.ok()) << r.first_failure();
  EXPECT_EQ(r.observed_pattern, (octic::OrbitPattern{4, 4, 4, 8, 8}));
  r = octic::verify_palindromic(1, -9);
  EXPECT_TRUE(r.ok()) << r.first_failure();
  EXPECT_EQ(r.observed_pattern, (octic::OrbitPattern{4, 4, 4, 16}));
  r = octic::verify_palindromic(4, 8);
  EXPECT_TRUE(r.ok()) << r.first_failure();
  EXPECT_EQ(r.observed_pattern, (octic::OrbitPattern{4, 4, 4, 4, 4, 8}));
}

TEST(RefineByPattern, Behaviour) {
  octic::Classification c;
  c.groups = {GroupId(4), GroupId(9), GroupId(10), GroupId(18)};
  const auto r = octic::refine_by_pattern(c, {4, 4, 4, 16});
  EXPECT_EQ(r.groups, (std::vector<GroupId>{GroupId(10), GroupId(18)}));
  EXPECT_FALSE(r.exact);
  EXPECT_THROW(octic::refine_by_pattern(c, {4, 8, 16}), octic::VerificationError);
}
