#include <gtest/gtest.h>

#include "octic/octic_irred.hpp"
#include "octic/quartic.hpp"
#include "octic/subset_factorization.hpp"
#include "oracles.hpp"

using octic::Rational;
using octic::UniPoly;

TEST(SolvePowerCompSystem, SpecExamples) {
  const auto s = octic::solve_power_comp_system(0, 34, 0, 1);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->k, Rational(4));
  EXPECT_EQ(s->l, Rational(8));
  EXPECT_EQ(s->m, Rational(4));
  EXPECT_EQ(s->n, Rational(1));
  EXPECT_EQ(s->factor1, (UniPoly{1, 4, 8, 4, 1}));
  EXPECT_EQ(s->factor2, (UniPoly{1, -4, 8, -4, 1}));
  EXPECT_EQ(s->factor1 * s->factor2, (UniPoly{1, 0, 0, 0, 34, 0, 0, 0, 1}));
  EXPECT_FALSE(octic::solve_power_comp_system(0, -1, 0, 1).has_value());
  EXPECT_FALSE(octic::solve_power_comp_system(1, -9, 1, 1).has_value());
  EXPECT_THROW(octic::solve_power_comp_system(0, 2, 0, 1), octic::ReducibleInputError);
}

TEST(SolvePowerCompSystem, WitnessSatisfiesSystem) {
  for (long a = -6; a <= 6; ++a) {
    for (long b = -10; b <= 10; ++b) {
      for (long c = -6; c <= 6; ++c) {
        for (long d : {1L, 4L, 9L}) {
          if (!octic::quartic_irreducible(UniPoly{d, c, b, a, 1})) continue;
          const auto s = octic::solve_power_comp_system(a, b, c, d);
          if (!s) continue;
          ASSERT_EQ(Rational(a), 2 * s->l - s->k * s->k);
          ASSERT_EQ(Rational(b), 2 * s->n - 2 * s->k * s->m + s->l * s->l);
          ASSERT_EQ(Rational(c), 2 * s->l * s->n - s->m * s->m);
          ASSERT_EQ(Rational(d), s->n * s->n);
          ASSERT_EQ(s->factor1 * s->factor2, octic::compose_power(UniPoly{d, c, b, a, 1}, 2));
        }
      }
    }
  }
}

TEST(DoublyEvenIrreducible, SpecExamples) {
  EXPECT_TRUE(octic::doubly_even_irreducible(-1, 1));
  EXPECT_FALSE(octic::doubly_even_irreducible(34, 1));
  EXPECT_TRUE(octic::doubly_even_irreducible(1, 4));
}

TEST(DoublyEvenIrreducible, AgreesWithPowerCompSystem) {
  int compared = 0;
  for (long a = -20; a <= 20; ++a) {
    for (long b = 1; b <= 20; ++b) {
      if (!octic::even_quartic_irreducible(a, b)) continue;
      ASSERT_EQ(octic::doubly_even_irreducible(a, b), !octic::solve_power_comp_system(0, a, 0, b).has_value())
          << a << "," << b;
      ++compared;
    }
  }
  EXPECT_GT(compared, 500);
}

TEST(DoublyEvenIrreducible, RationalFourthPowers) {
  // b = r^4, 2r^2 + a = t^2 and -4r + 2t = 1 is a square.
  const Rational r(1, 2);
  const Rational t(3, 2);
  const Rational a = t * t - 2 * r * r;
  const Rational b = r * r * r * r;
  ASSERT_TRUE(octic::even_quartic_irreducible(a, b));
  EXPECT_FALSE(octic::doubly_even_irreducible(a, b));
  const auto w = octic::power_comp_factor_witness(octic::even_quartic(a, b));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ((*w)[0] * (*w)[1], octic::doubly_even_octic(a, b));
}

TEST(PalindromicOcticIrreducible, SpecExamples) {
  EXPECT_TRUE(octic::palindromic_octic_irreducible(24, 48));
  EXPECT_FALSE(octic::palindromic_octic_irreducible(4, 6));
  EXPECT_TRUE(octic::palindromic_octic_irreducible(1, -1));
  EXPECT_THROW(octic::palindromic_octic_irreducible(0, 3), octic::OutOfScopeError);
}

TEST(PowerCompFactorWitness, ReducibleQuarticLifts) {
  const auto w = octic::power_comp_factor_witness(octic::even_quartic(0, 4));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(product(*w), octic::doubly_even_octic(0, 4));
  EXPECT_FALSE(octic::power_comp_factor_witness(octic::even_quartic(1, 4)).has_value());
  EXPECT_THROW(octic::power_comp_factor_witness(UniPoly{1, 0, 1}), octic::PreconditionError);
}

TEST(OcticIrreducible, SubsetFactorizationFindsNoFactorSpotCheck) {
  int checked = 0;
  for (long a = -12; a <= 12 && checked < 30; a += 3) {
    for (long b = -9; b <= 9 && checked < 30; b += 4) {
      if (a == 0) continue;
      if (!octic::palindromic_octic_irreducible(a, b)) continue;
      EXPECT_EQ(octic::subset_factorization(octic::palindromic_octic(a, b)).degrees, std::vector<int>{8})
          << a << "," << b;
      ++checked;
    }
  }
  for (long a = -10; a <= 10 && checked < 60; a += 2) {
    for (long k = 1; k <= 4; ++k) {
      const long b = k * k;
      if (!octic::even_quartic_irreducible(a, b) || !octic::doubly_even_irreducible(a, b)) continue;
      EXPECT_EQ(octic::subset_factorization(octic::doubly_even_octic(a, b)).degrees, std::vector<int>{8})
          << a << "," << b;
      ++checked;
    }
  }
  EXPECT_GE(checked, 30);
}
