#pragma once

#include <functional>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "octic/errors.hpp"
#include "octic/rational.hpp"

namespace octic {

// Dense univariate polynomial over Q, coefficients in ascending degree.
//
// The coefficient vector never carries trailing zeros; the zero polynomial
// is the empty vector and has degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, int degree);
  static UniPoly identity();  // x
  // Parses "[c0, c1, ...]" (ascending coefficients, rationals in p/q form).
  static UniPoly parse(std::string_view text);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const { return !is_zero() && leading() == 1; }

  // Coefficient of x^i; zero beyond the degree.
  const Rational& coeff(int i) const;
  const Rational& leading() const;
  std::span<const Rational> coeffs() const { return coeffs_; }

  Rational operator()(const Rational& x) const;

  UniPoly derivative() const;
  UniPoly monic() const;

  // "[c0, c1, ...]" with rationals in p/q form.
  std::string to_string() const;

  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const UniPoly& rhs);
  UniPoly& operator*=(const Rational& scalar);

  friend UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
  friend UniPoly operator-(UniPoly lhs, const UniPoly& rhs) { return lhs -= rhs; }
  friend UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs);
  friend UniPoly operator*(UniPoly lhs, const Rational& s) { return lhs *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly rhs) { return rhs *= s; }
  UniPoly operator-() const;

  friend bool operator==(const UniPoly& lhs, const UniPoly& rhs) = default;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

// Product of a list of polynomials (1 for the empty list).
UniPoly product(std::span<const UniPoly> factors);

struct DivRem {
  UniPoly quotient;
  UniPoly remainder;
};

DivRem divrem(const UniPoly& p, const UniPoly& q);

// Quotient p / q, throwing VerificationError if the division leaves a remainder.
UniPoly exact_divide(const UniPoly& p, const UniPoly& q);

bool divides(const UniPoly& q, const UniPoly& p);

// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(UniPoly p, UniPoly q);

bool is_squarefree(const UniPoly& p);

// p(x^k).
UniPoly compose_power(const UniPoly& p, int k);

// p(x + s).
UniPoly shift(const UniPoly& p, const Rational& s);

// p(c * x).
UniPoly scale_argument(const UniPoly& p, const Rational& c);

// p = content * primitive, primitive in Z[x] with positive leading coefficient.
struct IntegerForm {
  Rational content;
  std::vector<BigInt> coeffs;
};
IntegerForm integer_form(const UniPoly& p);

// Resultant by the Euclidean remainder sequence over Q.
Rational resultant(const UniPoly& p, const UniPoly& q);

// Resultant as the determinant of the Sylvester matrix, by fraction-free
// (Bareiss) elimination after clearing denominators.
Rational sylvester_resultant(const UniPoly& p, const UniPoly& q);

// Samples a pair (p_y, q_y) of polynomials in y for a value of the outer variable.
using ResultantSampler = std::function<std::pair<UniPoly, UniPoly>(const Rational&)>;

// Res_y(p(x, y), q(x, y)) as a polynomial in x of degree at most degree_bound.
//
// Samples are taken at x = 0, 1, -1, 2, -2, ...; abscissae at which either
// specialization drops below its generic y-degree are skipped.
UniPoly interpolated_resultant(const ResultantSampler& sampler, int degree_bound,
                               int generic_p_degree, int generic_q_degree);

// (-1)^(n(n-1)/2) Res(p, p') / lc(p).
Rational discriminant(const UniPoly& p);

// Whether Disc(base(x^k)) is a rational square, by the constant-term shortcut
// for even k. base must be monic, squarefree and have a nonzero constant term.
bool power_comp_disc_square_test(const UniPoly& base, int k);

// g with g*g == p and positive leading coefficient, when p is a square in Q[x].
std::optional<UniPoly> poly_square_root(const UniPoly& p);

// Distinct rational roots in increasing order.
std::vector<Rational> rational_roots(const UniPoly& p);

// Unique polynomial of degree < points.size() through the given points.
UniPoly interpolate(std::span<const std::pair<Rational, Rational>> points);

// Raised when an input polynomial is reducible where irreducibility is assumed.
class ReducibleInputError : public Error {
 public:
  ReducibleInputError(const std::string& what, std::vector<UniPoly> witness)
      : Error(what), witness_(std::move(witness)) {}
  // Nontrivial factors whose product is the offending polynomial (may be empty).
  const std::vector<UniPoly>& witness() const { return witness_; }

 private:
  std::vector<UniPoly> witness_;
};

}  // namespace octic
