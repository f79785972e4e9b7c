#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "octic/classification.hpp"
#include "octic/group_tables.hpp"
#include "octic/polynomial.hpp"
#include "octic/quartic.hpp"
#include "octic/rational.hpp"

namespace octic::palindromic {

// Validated parameters of an irreducible x^8 + a x^6 + b x^4 + a x^2 + 1, a != 0.
class Input {
 public:
  // OutOfScopeError for a = 0, ReducibleInputError (with factors) when reducible.
  static Input make(const Rational& a, const Rational& b);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  UniPoly polynomial() const;

 private:
  Input(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}
  Rational a_;
  Rational b_;
};

// R1 = x^4 + (a-4)x^2 + (b+2-2a), R2 = x^4 + (a+4)x^2 + (b+2+2a).
std::pair<UniPoly, UniPoly> build_quartic_resolvent_factors(const Rational& a, const Rational& b);

// The degree-16 cofactor of x^4 R1 R2 in the linear resolvent.
UniPoly build_R16(const Rational& a, const Rational& b);

std::vector<GroupId> candidate_groups(QuarticGroup group);

// P + Q = b + 2, P Q = a^2, P - Q = c >= 0.
struct InvariantPair {
  Rational P;
  Rational Q;
  Rational c;
};

// Present iff (b+2)^2 - 4a^2 is a rational square.
std::optional<InvariantPair> compute_invariants(const Rational& a, const Rational& b);

// S1 = x^4 + 2a x^3 + (8 + 2P - 4Q + a^2) x^2 + 2a(P-4) x + (P-4)^2; S2 swaps P and Q.
std::pair<UniPoly, UniPoly> build_S_factors(const Rational& a, const InvariantPair& inv);

// Split status of S1(x^2) and S2(x^2). Throws PreconditionError unless the
// input is irreducible with E4 quartic subfield, and VerificationError if a
// structural fact that must hold in that case fails.
std::array<SplitStatus, 2> s_factor_status(const Rational& a, const Rational& b, const InvariantPair& inv);

// Exact group in the E4 and C4 cases; the four-element candidate set in the D4 case.
Classification classify(const Rational& a, const Rational& b);

}  // namespace octic::palindromic
