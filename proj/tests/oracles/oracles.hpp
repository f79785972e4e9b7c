#pragma once

// Independent reference implementations used to derive and cross-check
// expected values. They deliberately share no code paths with the library
// beyond Rational / UniPoly arithmetic.

#include <cstdint>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "octic/polynomial.hpp"
#include "octic/rational.hpp"

namespace oracle {

using octic::BigInt;
using octic::Rational;
using octic::UniPoly;

inline bool is_square_brute(long n) {
  if (n < 0) return false;
  for (long k = 0; k * k <= n; ++k) {
    if (k * k == n) return true;
  }
  return false;
}

// Square test for a rational with small numerator and denominator by trial roots.
inline bool is_rational_square_brute(const Rational& x) {
  if (x.sign() < 0) return false;
  if (!x.num().fits_slong_p() || !x.den().fits_slong_p()) throw std::runtime_error("oracle range exceeded");
  return is_square_brute(x.num().get_si()) && is_square_brute(x.den().get_si());
}

// Determinant of the Sylvester matrix by Gaussian elimination with row swaps over Q.
inline Rational sylvester_gauss(const UniPoly& p, const UniPoly& q) {
  const int m = p.degree();
  const int n = q.degree();
  const int size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<Rational>> a(size, std::vector<Rational>(size));
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i <= m; ++i) a[r][r + i] = p.coeff(m - i);
  }
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i <= n; ++i) a[n + r][r + i] = q.coeff(n - i);
  }
  Rational det = 1;
  for (int col = 0; col < size; ++col) {
    int pivot = col;
    while (pivot < size && a[pivot][col].is_zero()) ++pivot;
    if (pivot == size) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int r = col + 1; r < size; ++r) {
      if (a[r][col].is_zero()) continue;
      const Rational factor = a[r][col] / a[col][col];
      for (int c = col; c < size; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  return det;
}

// f(x0 - y) as a polynomial in y, expanded by the binomial theorem.
inline UniPoly reflect_shift(const UniPoly& f, const Rational& x0) {
  UniPoly out;
  const UniPoly linear{x0, -1};
  UniPoly power = UniPoly::constant(1);
  for (int i = 0; i <= f.degree(); ++i) {
    out += f.coeff(i) * power;
    power = power * linear;
  }
  return out;
}

// Checks Res_y(f(y), f(x0 - y)) = 2^8 f(x0/2) R(x0)^2 at a single point.
inline bool resolvent_identity_at(const UniPoly& f, const UniPoly& r, const Rational& x0) {
  const Rational lhs = sylvester_gauss(f, reflect_shift(f, x0));
  const Rational rx = r(x0);
  return lhs == Rational(256) * f(x0 / 2) * rx * rx;
}

// Integer roots of a monic integer polynomial by scanning divisors of the constant term.
inline std::vector<long> integer_roots_brute(const std::vector<long>& c) {
  std::vector<long> out;
  if (c.front() == 0) out.push_back(0);
  const long c0 = c.front() < 0 ? -c.front() : c.front();
  for (long d = 1; d <= c0; ++d) {
    if (c0 % d != 0) continue;
    for (long r : {d, -d}) {
      BigInt acc = 0;
      for (std::size_t i = c.size(); i-- > 0;) acc = acc * r + c[i];
      if (acc == 0) out.push_back(r);
    }
  }
  return out;
}

// Whether the monic integer quartic x^4 + c3 x^3 + c2 x^2 + c1 x + c0 has a monic
// integer quadratic factor x^2 + p x + q, by exhaustive search over q | c0 and
// |p| bounded by twice the Cauchy root bound.
inline std::optional<std::pair<long, long>> integer_quadratic_factor_brute(const std::vector<long>& c) {
  long bound = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) bound = std::max(bound, c[i] < 0 ? -c[i] : c[i]);
  bound += 1;
  const long c0 = c[0];
  const auto divides_quartic = [&](long p, long q) {
    // quartic = (x^2 + p x + q)(x^2 + s x + t) with s = c3 - p, t from the x^2 term.
    const long s = c[3] - p;
    const long t = c[2] - q - p * s;
    return p * t + q * s == c[1] && q * t == c0;
  };
  const long abs_c0 = c0 < 0 ? -c0 : c0;
  for (long p = -2 * bound; p <= 2 * bound; ++p) {
    if (c0 == 0) {
      if (divides_quartic(p, 0)) return std::pair{p, 0L};
      continue;
    }
    for (long d = 1; d <= abs_c0; ++d) {
      if (abs_c0 % d != 0) continue;
      for (long q : {d, -d}) {
        if (divides_quartic(p, q)) return std::pair{p, q};
      }
    }
  }
  return std::nullopt;
}

inline bool integer_quartic_reducible_brute(const std::vector<long>& c) {
  return !integer_roots_brute(c).empty() || integer_quadratic_factor_brute(c).has_value();
}

// 64-bit FNV-1a.
inline std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Random polynomial with integer coefficients in [-range, range], exact degree.
inline UniPoly random_poly(std::mt19937_64& rng, int degree, int range, bool monic = false) {
  std::uniform_int_distribution<int> dist(-range, range);
  std::vector<Rational> c(degree + 1);
  for (int i = 0; i <= degree; ++i) c[i] = dist(rng);
  if (monic) {
    c[degree] = 1;
  } else if (c[degree].is_zero()) {
    c[degree] = 1;
  }
  return UniPoly(std::move(c));
}

inline Rational random_rational(std::mt19937_64& rng, int num_range, int den_max) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_max);
  return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

}  // namespace oracle
