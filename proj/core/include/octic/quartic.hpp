#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "octic/polynomial.hpp"
#include "octic/rational.hpp"

namespace octic {

// Galois group of an irreducible quartic from the even or palindromic families.
enum class QuarticGroup { E4, C4, D4 };

std::string_view to_string(QuarticGroup group);

// Two factors whose product is the quartic under test.
using QuarticSplit = std::pair<UniPoly, UniPoly>;

// x^4 + a x^2 + b.
UniPoly even_quartic(const Rational& a, const Rational& b);

// x^4 + a x^3 + b x^2 + a x + 1.
UniPoly palindromic_quartic(const Rational& a, const Rational& b);

// Explicit factorization of x^4 + a x^2 + b when it is reducible over Q.
std::optional<QuarticSplit> even_quartic_split(const Rational& a, const Rational& b);

// Irreducibility of x^4 + a x^2 + b: a^2 - 4b is not a square and, when
// sqrt(b) is rational, neither is -a + 2 sqrt(b) nor -a - 2 sqrt(b).
bool even_quartic_irreducible(const Rational& a, const Rational& b);

// E4 if b is a square, C4 if b(a^2 - 4b) is, D4 otherwise.
// Throws ReducibleInputError when x^4 + a x^2 + b is reducible.
QuarticGroup kappe_warren_classify(const Rational& a, const Rational& b);

// Quadratic factors of x^4 + c x^2 + d x + e, when they exist over Q.
std::optional<QuarticSplit> depressed_quadratic_factors(const Rational& c, const Rational& d, const Rational& e);

// Whether x^4 + c x^2 + d x + e is a product of two rational quadratics:
// its resolvent cubic x^3 + 2c x^2 + (c^2 - 4e) x - d^2 has a nonzero square
// root in Q, or d = 0 and c^2 - 4e is a square.
bool depressed_quadratic_split(const Rational& c, const Rational& d, const Rational& e);

// A nontrivial factorization of a monic quartic (linear times cubic or two
// quadratics), or nullopt when it is irreducible.
std::optional<QuarticSplit> quartic_factor_witness(const UniPoly& p);

bool quartic_irreducible(const UniPoly& p);

// Kaplansky's classification of x^4 + a x^3 + b x^2 + a x + 1.
// Throws ReducibleInputError when the quartic is reducible.
QuarticGroup palindromic_quartic_classify(const Rational& a, const Rational& b);

}  // namespace octic
