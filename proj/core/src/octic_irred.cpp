#include "octic/octic_irred.hpp"

#include "octic/quartic.hpp"

namespace octic {

UniPoly doubly_even_octic(const Rational& a, const Rational& b) { return compose_power(even_quartic(a, b), 2); }

UniPoly palindromic_octic(const Rational& a, const Rational& b) {
  return compose_power(palindromic_quartic(a, b), 2);
}

std::optional<PowerCompSolution> solve_power_comp_system(const Rational& a, const Rational& b, const Rational& c,
                                                         const Rational& d) {
  const UniPoly g{d, c, b, a, 1};
  if (auto split = quartic_factor_witness(g)) {
    throw ReducibleInputError(g.to_string() + " is reducible", {split->first, split->second});
  }
  const auto root_d = rational_square_root(d);
  if (!root_d || root_d->is_zero()) return std::nullopt;
  const UniPoly target = compose_power(g, 2);
  for (const Rational& n : {*root_d, -*root_d}) {
    // Candidate values of l are the rational roots of the elimination quartic.
    const UniPoly elimination{b * b - 4 * a * c - 4 * b * n + 4 * n * n, 8 * c + 8 * a * n, -(2 * b + 12 * n), 0, 1};
    for (const Rational& l : rational_roots(elimination)) {
      const auto k_abs = rational_square_root(2 * l - a);
      const auto m_abs = rational_square_root(2 * l * n - c);
      if (!k_abs || !m_abs) continue;
      if (k_abs->is_zero() && m_abs->is_zero()) continue;
      // (k, m) -> (-k, -m) only swaps the two factors, so fix k >= 0.
      for (const Rational& m : {*m_abs, -*m_abs}) {
        const Rational& k = *k_abs;
        if (2 * n - 2 * k * m + l * l != b) continue;
        PowerCompSolution solution{k, l, m, n, UniPoly{n, m, l, k, 1}, UniPoly{n, -m, l, -k, 1}};
        if (solution.factor1 * solution.factor2 != target) {
          throw VerificationError("power-compositional witness does not multiply back to " + target.to_string());
        }
        return solution;
      }
    }
  }
  return std::nullopt;
}

bool doubly_even_irreducible(const Rational& a, const Rational& b) {
  if (auto split = even_quartic_split(a, b)) {
    throw ReducibleInputError("x^4 + (" + a.to_string() + ")x^2 + (" + b.to_string() + ") is reducible",
                              {split->first, split->second});
  }
  const auto root_b = rational_square_root(b);
  if (!root_b) return true;
  const auto r_abs = rational_square_root(*root_b);
  if (!r_abs) return true;
  for (const Rational& r : {*r_abs, -*r_abs}) {
    const auto t = rational_square_root(2 * r * r + a);
    if (!t) continue;
    for (const Rational& value : {4 * r + 2 * *t, -4 * r + 2 * *t, 4 * r - 2 * *t, -4 * r - 2 * *t}) {
      if (is_rational_square(value)) return false;
    }
  }
  return true;
}

bool palindromic_octic_irreducible(const Rational& a, const Rational& b) {
  if (a.is_zero()) throw OutOfScopeError("palindromic family requires a != 0");
  if (!quartic_irreducible(palindromic_quartic(a, b))) return false;
  return !solve_power_comp_system(a, b, a, 1).has_value();
}

std::optional<std::vector<UniPoly>> power_comp_factor_witness(const UniPoly& g) {
  if (g.degree() != 4 || !g.is_monic()) throw PreconditionError("power_comp_factor_witness needs a monic quartic");
  if (auto split = quartic_factor_witness(g)) {
    return std::vector<UniPoly>{compose_power(split->first, 2), compose_power(split->second, 2)};
  }
  auto solution = solve_power_comp_system(g.coeff(3), g.coeff(2), g.coeff(1), g.coeff(0));
  if (!solution) return std::nullopt;
  return std::vector<UniPoly>{solution->factor1, solution->factor2};
}

}  // namespace octic
