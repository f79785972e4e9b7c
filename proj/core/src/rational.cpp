#include "octic/rational.hpp"

#include <cctype>

#include "octic/errors.hpp"

namespace octic {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

namespace {

std::string_view strip(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

BigInt parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw ParseError("malformed rational '" + std::string(whole) + "'");
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw ParseError("malformed rational '" + std::string(whole) + "'");
    }
  }
  return BigInt(std::string(digits));
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const std::string_view whole = text;
  text = strip(text);
  bool negative = false;
  constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
  if (text.starts_with('-')) {
    negative = true;
    text.remove_prefix(1);
  } else if (text.starts_with(kUnicodeMinus)) {
    negative = true;
    text.remove_prefix(kUnicodeMinus.size());
  } else if (text.starts_with('+')) {
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  BigInt num = parse_digits(text.substr(0, slash), whole);
  BigInt den = 1;
  if (slash != std::string_view::npos) {
    den = parse_digits(text.substr(slash + 1), whole);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(whole) + "'");
  }
  if (negative) num = -num;
  return Rational(num, den);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of zero");
  return Rational(den(), num());
}

Rational Rational::pow(unsigned exponent) const {
  Rational result = 1;
  Rational base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

std::string Rational::to_string() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw PreconditionError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational out;
  out.value_ = -value_;
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

std::optional<BigInt> int_sqrt_exact(const BigInt& n) {
  if (n < 0) throw PreconditionError("int_sqrt_exact of a negative integer");
  if (n < 2) return n;
  // Start above the root: 2^ceil(bits/2) >= sqrt(n). The iterates then
  // decrease monotonically to floor(sqrt(n)).
  const auto bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  BigInt x = 1;
  x <<= static_cast<mp_bitcnt_t>((bits + 1) / 2);
  while (true) {
    BigInt next = (x + n / x) >> 1;
    if (next >= x) break;
    x = std::move(next);
  }
  if (x * x == n) return x;
  return std::nullopt;
}

std::optional<Rational> rational_square_root(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  auto num = int_sqrt_exact(x.num());
  if (!num) return std::nullopt;
  auto den = int_sqrt_exact(x.den());
  if (!den) return std::nullopt;
  return Rational(*num, *den);
}

bool quad_field_square_test(const Rational& x, const Rational& d) {
  if (is_rational_square(d)) {
    throw PreconditionError("quad_field_square_test: d = " + d.to_string() + " is a rational square");
  }
  return is_rational_square(x) || is_rational_square(d * x);
}

}  // namespace octic
