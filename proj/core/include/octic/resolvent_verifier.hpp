#pragma once

#include <string>
#include <vector>

#include "octic/classification.hpp"
#include "octic/group_tables.hpp"
#include "octic/polynomial.hpp"
#include "octic/subset_factorization.hpp"

namespace octic {

// The degree-28 polynomial whose roots are the sums of two distinct roots of
// the monic octic f (f(0) != 0), obtained from
// Res_y(f(y), f(x - y)) = 2^8 f(x/2) R(x)^2.
// Throws VerificationError if the division or the square root fails.
UniPoly linear_resolvent(const UniPoly& f);

struct VerificationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;
  // Orbit lengths read off the factorization of the resolvent.
  OrbitPattern observed_pattern;
  // Classification of the input, refined by the observed pattern when inexact.
  Classification classification;
  bool ok() const;
  // Name of the first failing check, or empty.
  std::string first_failure() const;
};

// Checks the closed-form resolvent identity, every emitted split, and that the
// resolvent's factor degrees match the classified group.
VerificationReport verify_doubly_even(const Rational& a, const Rational& b);
VerificationReport verify_palindromic(const Rational& a, const Rational& b);

// Keeps the candidates whose orbit pattern equals `observed`.
Classification refine_by_pattern(const Classification& c, const OrbitPattern& observed);

// Palindromic classification with D4 candidate sets narrowed by the
// factorization oracle.
Classification classify_palindromic_refined(const Rational& a, const Rational& b);

}  // namespace octic
