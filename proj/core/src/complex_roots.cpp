#include "complex_roots.hpp"

#include <algorithm>
#include <cmath>

namespace octic::detail {

Complex operator+(const Complex& x, const Complex& y) { return {x.re + y.re, x.im + y.im}; }
Complex operator-(const Complex& x, const Complex& y) { return {x.re - y.re, x.im - y.im}; }
Complex operator*(const Complex& x, const Complex& y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}
Complex operator/(const Complex& x, const Complex& y) {
  const Real norm = y.re * y.re + y.im * y.im;
  return {(x.re * y.re + x.im * y.im) / norm, (x.im * y.re - x.re * y.im) / norm};
}
Real abs(const Complex& x) { return boost::multiprecision::sqrt(x.re * x.re + x.im * x.im); }

Real to_real(const BigInt& n) {
  Real out;
  mpfr_set_z(out.backend().data(), n.get_mpz_t(), MPFR_RNDN);
  return out;
}

BigInt round_to_integer(const Real& x) {
  BigInt out;
  mpfr_get_z(out.get_mpz_t(), x.backend().data(), MPFR_RNDN);
  return out;
}

PrecisionScope::PrecisionScope(unsigned digits) : saved_(Real::default_precision()) {
  Real::default_precision(digits);
}
PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

namespace {

struct Evaluation {
  Complex value;
  Complex slope;
  Real magnitude_bound;  // sum |c_i| |z|^i
};

Evaluation evaluate(const std::vector<Real>& coeffs, const Complex& z) {
  const Real radius = abs(z);
  Evaluation e{{coeffs.back(), Real(0)}, {Real(0), Real(0)}, boost::multiprecision::abs(coeffs.back())};
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
    e.slope = e.slope * z + e.value;
    e.value = e.value * z + Complex{coeffs[i], Real(0)};
    e.magnitude_bound = e.magnitude_bound * radius + boost::multiprecision::abs(coeffs[i]);
  }
  return e;
}

}  // namespace

RootEnclosure enclose_roots(const std::vector<BigInt>& int_coeffs, unsigned digits) {
  using boost::multiprecision::pow;
  const std::size_t n = int_coeffs.size() - 1;
  std::vector<Real> coeffs;
  coeffs.reserve(int_coeffs.size());
  for (const BigInt& c : int_coeffs) coeffs.push_back(to_real(c));
  const Real lead = boost::multiprecision::abs(coeffs.back());

  // Start on a circle enclosing every root.
  Real bound = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (int_coeffs[i] == 0) continue;
    const Real term = pow(boost::multiprecision::abs(coeffs[i]) / lead, Real(1) / Real(n - i));
    if (term > bound) bound = term;
  }
  bound = 2 * bound + 1;
  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Real angle = two_pi * Real(k) / Real(n) + Real(0.4);
    z[k] = {bound * boost::multiprecision::cos(angle), bound * boost::multiprecision::sin(angle)};
  }

  const Real eps = pow(Real(10), -static_cast<int>(digits));
  const Real target = pow(Real(10), -static_cast<int>(digits) + 10);
  const int max_iterations = 200 + 40 * static_cast<int>(n);
  for (int it = 0; it < max_iterations; ++it) {
    Real worst = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const Evaluation e = evaluate(coeffs, z[k]);
      if (e.value.re == 0 && e.value.im == 0) continue;
      const Complex ratio = e.value / e.slope;
      Complex repulsion{Real(0), Real(0)};
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) repulsion = repulsion + Complex{Real(1), Real(0)} / (z[k] - z[j]);
      }
      const Complex step = ratio / (Complex{Real(1), Real(0)} - ratio * repulsion);
      z[k] = z[k] - step;
      const Real size = abs(step) / (1 + abs(z[k]));
      if (size > worst) worst = size;
    }
    if (worst < target) break;
  }

  RootEnclosure out;
  out.centers = z;
  out.radii.resize(n);
  // Weierstrass inclusion: each disc of radius n |p(z_k)| / |lc prod (z_k - z_j)|
  // holds a root, and disjoint discs hold exactly one each.
  for (std::size_t k = 0; k < n; ++k) {
    const Evaluation e = evaluate(coeffs, z[k]);
    Real denom = lead;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != k) denom *= abs(z[k] - z[j]);
    }
    if (denom == 0) return out;
    const Real residual = abs(e.value) + eps * Real(4 * n + 4) * e.magnitude_bound;
    out.radii[k] = Real(n) * residual / denom;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (abs(z[i] - z[j]) <= out.radii[i] + out.radii[j]) return out;
    }
  }
  out.certified = true;
  return out;
}

}  // namespace octic::detail
