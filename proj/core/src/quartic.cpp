#include "octic/quartic.hpp"

namespace octic {

std::string_view to_string(QuarticGroup group) {
  switch (group) {
    case QuarticGroup::E4:
      return "E4";
    case QuarticGroup::C4:
      return "C4";
    case QuarticGroup::D4:
      return "D4";
  }
  return "?";
}

UniPoly even_quartic(const Rational& a, const Rational& b) { return UniPoly{b, 0, a, 0, 1}; }

UniPoly palindromic_quartic(const Rational& a, const Rational& b) { return UniPoly{1, a, b, a, 1}; }

std::optional<QuarticSplit> even_quartic_split(const Rational& a, const Rational& b) {
  const Rational two = 2;
  if (auto s = rational_square_root(a * a - 4 * b)) {
    return QuarticSplit{UniPoly{(a - *s) / two, 0, 1}, UniPoly{(a + *s) / two, 0, 1}};
  }
  const auto root_b = rational_square_root(b);
  if (!root_b) return std::nullopt;
  // (x^2 + r)^2 - t^2 x^2 with r = +-sqrt(b) and t^2 = 2r - a.
  for (const Rational& r : {*root_b, -*root_b}) {
    if (auto t = rational_square_root(2 * r - a)) {
      return QuarticSplit{UniPoly{r, *t, 1}, UniPoly{r, -*t, 1}};
    }
  }
  return std::nullopt;
}

bool even_quartic_irreducible(const Rational& a, const Rational& b) {
  if (is_rational_square(a * a - 4 * b)) return false;
  const auto root_b = rational_square_root(b);
  if (!root_b) return true;
  return !is_rational_square(-a + 2 * *root_b) && !is_rational_square(-a - 2 * *root_b);
}

QuarticGroup kappe_warren_classify(const Rational& a, const Rational& b) {
  if (auto split = even_quartic_split(a, b)) {
    throw ReducibleInputError("x^4 + (" + a.to_string() + ")x^2 + (" + b.to_string() + ") is reducible",
                              {split->first, split->second});
  }
  if (is_rational_square(b)) return QuarticGroup::E4;
  if (is_rational_square(b * (a * a - 4 * b))) return QuarticGroup::C4;
  return QuarticGroup::D4;
}

std::optional<QuarticSplit> depressed_quadratic_factors(const Rational& c, const Rational& d, const Rational& e) {
  const Rational two = 2;
  const UniPoly cubic{-(d * d), c * c - 4 * e, 2 * c, 1};
  for (const Rational& z : rational_roots(cubic)) {
    if (z.is_zero()) continue;
    const auto u = rational_square_root(z);
    if (!u) continue;
    // (x^2 + u x + beta)(x^2 - u x + gamma): beta + gamma = c + u^2, u(gamma - beta) = d.
    const Rational sum = c + z;
    const Rational diff = d / *u;
    return QuarticSplit{UniPoly{(sum - diff) / two, *u, 1}, UniPoly{(sum + diff) / two, -*u, 1}};
  }
  if (d.is_zero()) {
    if (auto s = rational_square_root(c * c - 4 * e)) {
      return QuarticSplit{UniPoly{(c - *s) / two, 0, 1}, UniPoly{(c + *s) / two, 0, 1}};
    }
  }
  return std::nullopt;
}

bool depressed_quadratic_split(const Rational& c, const Rational& d, const Rational& e) {
  return depressed_quadratic_factors(c, d, e).has_value();
}

std::optional<QuarticSplit> quartic_factor_witness(const UniPoly& p) {
  if (p.degree() != 4 || !p.is_monic()) throw PreconditionError("quartic_factor_witness needs a monic quartic");
  const auto roots = rational_roots(p);
  if (!roots.empty()) {
    const UniPoly linear{-roots.front(), 1};
    return QuarticSplit{linear, exact_divide(p, linear)};
  }
  const Rational s = p.coeff(3) / Rational(4);
  const UniPoly depressed = shift(p, -s);
  auto split = depressed_quadratic_factors(depressed.coeff(2), depressed.coeff(1), depressed.coeff(0));
  if (!split) return std::nullopt;
  return QuarticSplit{shift(split->first, s), shift(split->second, s)};
}

bool quartic_irreducible(const UniPoly& p) { return !quartic_factor_witness(p).has_value(); }

QuarticGroup palindromic_quartic_classify(const Rational& a, const Rational& b) {
  const UniPoly g = palindromic_quartic(a, b);
  if (auto split = quartic_factor_witness(g)) {
    throw ReducibleInputError(g.to_string() + " is reducible", {split->first, split->second});
  }
  const Rational delta = (b + 2) * (b + 2) - 4 * a * a;
  if (is_rational_square(delta)) return QuarticGroup::E4;
  if (is_rational_square((a * a - 4 * b + 8) * delta)) return QuarticGroup::C4;
  return QuarticGroup::D4;
}

}  // namespace octic
