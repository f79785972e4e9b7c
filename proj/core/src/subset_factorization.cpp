#include "octic/subset_factorization.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "complex_roots.hpp"

namespace octic {

namespace {

using detail::Complex;
using detail::Real;

UniPoly from_integers(const std::vector<BigInt>& coeffs) {
  std::vector<Rational> out(coeffs.begin(), coeffs.end());
  return UniPoly(std::move(out));
}

bool lexicographically_less(const UniPoly& x, const UniPoly& y) {
  if (x.degree() != y.degree()) return x.degree() < y.degree();
  for (int i = x.degree(); i >= 0; --i) {
    if (x.coeff(i) != y.coeff(i)) return x.coeff(i) < y.coeff(i);
  }
  return false;
}

bool advance(std::vector<std::size_t>& pick, std::size_t n) {
  const std::size_t k = pick.size();
  for (std::size_t i = k; i-- > 0;) {
    if (pick[i] < n - k + i) {
      ++pick[i];
      for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
      return true;
    }
  }
  return false;
}

struct Inconclusive {};

// One attempt at a fixed precision; nullopt means the numeric evidence was
// insufficient and the caller should retry with more digits.
std::optional<std::vector<UniPoly>> attempt(const IntegerForm& form, unsigned digits) {
  detail::PrecisionScope scope(digits);
  const detail::RootEnclosure enclosure = detail::enclose_roots(form.coeffs, digits);
  if (!enclosure.certified) return std::nullopt;

  std::vector<std::size_t> order(enclosure.centers.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    const auto& x = enclosure.centers[i];
    const auto& y = enclosure.centers[j];
    return x.re != y.re ? x.re < y.re : x.im < y.im;
  });
  std::vector<Complex> roots;
  Real with_error = 1;
  Real without_error = 1;
  for (std::size_t i : order) {
    roots.push_back(enclosure.centers[i]);
    const Real r = detail::abs(enclosure.centers[i]);
    with_error *= 1 + r + enclosure.radii[i];
    without_error *= 1 + r;
  }
  const Real lead = detail::to_real(form.coeffs.back());
  const Real coefficient_error = lead * (with_error - without_error);
  if (coefficient_error > Real("1e-6")) return std::nullopt;
  const Real tolerance = 4 * coefficient_error + boost::multiprecision::pow(Real(10), -static_cast<int>(digits / 2));

  const auto near_integer = [&](const Real& x) {
    return boost::multiprecision::abs(x - detail::to_real(detail::round_to_integer(x))) <= tolerance;
  };

  std::vector<UniPoly> factors;
  UniPoly remaining = from_integers(form.coeffs);
  std::size_t size = 1;
  while (2 * size <= roots.size()) {
    bool found = false;
    std::vector<std::size_t> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    do {
      Complex sum{Real(0), Real(0)};
      for (std::size_t i : pick) sum = sum + roots[i];
      if (boost::multiprecision::abs(sum.im) * lead > tolerance || !near_integer(sum.re * lead)) continue;

      // L * prod (x - z_i) has integer coefficients whenever the subset is a factor.
      std::vector<Complex> poly{{lead, Real(0)}};
      for (std::size_t i : pick) {
        std::vector<Complex> next(poly.size() + 1, Complex{Real(0), Real(0)});
        for (std::size_t d = 0; d < poly.size(); ++d) {
          next[d + 1] = next[d + 1] + poly[d];
          next[d] = next[d] - poly[d] * roots[i];
        }
        poly = std::move(next);
      }
      std::vector<BigInt> rounded;
      bool integral = true;
      for (const Complex& c : poly) {
        if (boost::multiprecision::abs(c.im) > tolerance || !near_integer(c.re)) {
          integral = false;
          break;
        }
        rounded.push_back(detail::round_to_integer(c.re));
      }
      if (!integral) continue;
      const UniPoly candidate = from_integers(integer_form(from_integers(rounded)).coeffs);
      const DivRem qr = divrem(remaining, candidate);
      if (!qr.remainder.is_zero()) throw Inconclusive{};
      factors.push_back(candidate.monic());
      remaining = qr.quotient;
      std::vector<Complex> rest;
      for (std::size_t i = 0; i < roots.size(); ++i) {
        if (!std::binary_search(pick.begin(), pick.end(), i)) rest.push_back(roots[i]);
      }
      roots = std::move(rest);
      found = true;
      break;
    } while (advance(pick, roots.size()));
    // Every smaller subset has been ruled out, so accepted factors are irreducible.
    if (!found) ++size;
  }
  if (remaining.degree() > 0) factors.push_back(remaining.monic());
  return factors;
}

}  // namespace

FactorPattern subset_factorization(const UniPoly& p, int max_degree, const SubsetFactorizationOptions& options) {
  if (max_degree > 16) throw PreconditionError("subset_factorization supports degree at most 16");
  if (p.degree() < 1) throw PreconditionError("subset_factorization needs a nonconstant polynomial");
  if (p.degree() > max_degree) {
    throw PreconditionError("degree " + std::to_string(p.degree()) + " exceeds max_degree " +
                            std::to_string(max_degree));
  }
  if (!is_squarefree(p)) throw PreconditionError("subset_factorization needs a squarefree polynomial");

  const IntegerForm form = integer_form(p);
  unsigned digits = options.initial_digits;
  for (int round = 0; round <= options.max_doublings; ++round, digits *= 2) {
    std::optional<std::vector<UniPoly>> factors;
    try {
      factors = attempt(form, digits);
    } catch (const Inconclusive&) {
      continue;
    }
    if (!factors) continue;
    std::sort(factors->begin(), factors->end(), lexicographically_less);
    FactorPattern out;
    for (const UniPoly& f : *factors) out.degrees.push_back(f.degree());
    std::sort(out.degrees.begin(), out.degrees.end());
    out.factors = std::move(*factors);
    return out;
  }
  throw PrecisionError("subset_factorization could not certify " + p.to_string() + " within the precision cap");
}

}  // namespace octic
