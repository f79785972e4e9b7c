#pragma once

#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "octic/rational.hpp"

namespace octic::detail {

using Real = boost::multiprecision::mpfr_float;

struct Complex {
  Real re;
  Real im;
};

Complex operator+(const Complex& x, const Complex& y);
Complex operator-(const Complex& x, const Complex& y);
Complex operator*(const Complex& x, const Complex& y);
Complex operator/(const Complex& x, const Complex& y);
Real abs(const Complex& x);

Real to_real(const BigInt& n);
// Nearest integer.
BigInt round_to_integer(const Real& x);

// Sets the working precision for new mpfr values on this thread and restores it on exit.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

// Approximate roots of an integer polynomial together with radii of
// pairwise disjoint discs, each containing exactly one root.
struct RootEnclosure {
  std::vector<Complex> centers;
  std::vector<Real> radii;
  bool certified = false;
};

// Aberth iteration at the current precision. Coefficients ascend and the
// polynomial must be squarefree with degree >= 1.
RootEnclosure enclose_roots(const std::vector<BigInt>& coeffs, unsigned digits);

}  // namespace octic::detail
