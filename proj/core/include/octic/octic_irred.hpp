#pragma once

#include <optional>
#include <vector>

#include "octic/polynomial.hpp"
#include "octic/rational.hpp"

namespace octic {

// Witness that g(x^2) splits for an irreducible monic quartic g:
// g(x^2) = (x^4 + k x^3 + l x^2 + m x + n)(x^4 - k x^3 + l x^2 - m x + n).
struct PowerCompSolution {
  Rational k;
  Rational l;
  Rational m;
  Rational n;
  UniPoly factor1;
  UniPoly factor2;
};

// Solves a = 2l - k^2, b = 2n - 2km + l^2, c = 2ln - m^2, d = n^2 over Q for
// the irreducible quartic x^4 + a x^3 + b x^2 + c x + d. Absence of a solution
// means the octic g(x^2) is irreducible. Throws ReducibleInputError when the
// quartic itself is reducible.
std::optional<PowerCompSolution> solve_power_comp_system(const Rational& a, const Rational& b, const Rational& c,
                                                         const Rational& d);

// Irreducibility of x^8 + a x^4 + b through the fourth-power criterion:
// reducible exactly when b = r^4 and one of +-4r +- 2 sqrt(2r^2 + a) is a
// rational square. Requires x^4 + a x^2 + b irreducible.
bool doubly_even_irreducible(const Rational& a, const Rational& b);

// Irreducibility of x^8 + a x^6 + b x^4 + a x^2 + 1 for a != 0.
bool palindromic_octic_irreducible(const Rational& a, const Rational& b);

// Nontrivial factors of g(x^2) for a monic quartic g, or nullopt when g(x^2)
// is irreducible. Handles reducible g by lifting its factorization.
std::optional<std::vector<UniPoly>> power_comp_factor_witness(const UniPoly& g);

UniPoly doubly_even_octic(const Rational& a, const Rational& b);
UniPoly palindromic_octic(const Rational& a, const Rational& b);

}  // namespace octic
