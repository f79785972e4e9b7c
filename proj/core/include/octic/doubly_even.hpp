#pragma once

#include <array>

#include "octic/classification.hpp"
#include "octic/polynomial.hpp"
#include "octic/rational.hpp"

namespace octic::doubly_even {

// Validated parameters of an irreducible x^8 + a x^4 + b with b a rational square.
class Input {
 public:
  // Throws OutOfScopeError when b is not a square and ReducibleInputError
  // (with factors) when the octic is reducible.
  static Input make(const Rational& a, const Rational& b);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  // Nonnegative square root of b.
  const Rational& sqrt_b() const { return sqrt_b_; }
  UniPoly polynomial() const;

 private:
  Input(Rational a, Rational b, Rational sqrt_b) : a_(std::move(a)), b_(std::move(b)), sqrt_b_(std::move(sqrt_b)) {}
  Rational a_;
  Rational b_;
  Rational sqrt_b_;
};

// The three even quartics R_i with linear resolvent x^4 R1(x^2) R2(x^2) R3(x^2):
//   R1 = x^4 + (2a + 12 sqrt b) x^2 + (a - 2 sqrt b)^2
//   R2 = x^4 + (2a - 12 sqrt b) x^2 + (a + 2 sqrt b)^2
//   R3 = x^4 - 4a x^2 + 16b
struct ResolventFactors {
  UniPoly r1;
  UniPoly r2;
  UniPoly r3;
};

ResolventFactors build_resolvent_factors(const Input& in);

// Split status of R1(x^2), R2(x^2), R3(x^2) with explicit quartic factors.
std::array<SplitStatus, 3> factor_status(const Input& in);

enum class ThetaCandidate { minus_one, sqrt_b, minus_sqrt_b };

// Whether r is a square in Q(theta) for a root theta of the octic; requires
// sqrt(b) not to be a rational square.
bool theta_square_test(const Input& in, ThetaCandidate r);

// Galois group of x^8 + a x^4 + b (b a square), following the decision tree
// branch by branch. The trace lists each square test in evaluation order.
Classification classify(const Rational& a, const Rational& b);

// The b = 1 specialization, evaluated directly on a +- 2 and 4 - a^2.
GroupId classify_b1(const Rational& a);

}  // namespace octic::doubly_even
