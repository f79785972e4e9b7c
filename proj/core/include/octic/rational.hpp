#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace octic {

using BigInt = mpz_class;

// Exact rational number kept in lowest terms with a positive denominator.
//
// Zero is 0/1, so two rationals are equal exactly when their numerators and
// denominators are equal.
class Rational {
 public:
  Rational() = default;
  Rational(int value) : value_(value) {}            // NOLINT(google-explicit-constructor)
  Rational(long value) : value_(value) {}           // NOLINT(google-explicit-constructor)
  Rational(long long value) : Rational(BigInt(std::to_string(value))) {}  // NOLINT
  Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);

  // Parses "p", "p/q", with an optional leading '-' or U+2212.
  static Rational parse(std::string_view text);

  const BigInt& num() const { return value_.get_num(); }
  const BigInt& den() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return den() == 1; }

  Rational abs() const;
  Rational inverse() const;
  Rational pow(unsigned exponent) const;
  double to_double() const { return value_.get_d(); }

  std::string to_string() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& gmp() const { return value_; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

// Floor square root by integer Newton iteration; present only when exact.
std::optional<BigInt> int_sqrt_exact(const BigInt& n);

// Nonnegative r with r*r == x, when x is the square of a rational.
std::optional<Rational> rational_square_root(const Rational& x);

inline bool is_rational_square(const Rational& x) { return rational_square_root(x).has_value(); }

// Whether x is a square in Q(sqrt(d)); d must not itself be a rational square.
bool quad_field_square_test(const Rational& x, const Rational& d);

}  // namespace octic
