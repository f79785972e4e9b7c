#include "octic/integer_factor.hpp"

#include <algorithm>
#include <map>

#include "octic/errors.hpp"

namespace octic {

namespace {

bool is_probable_prime(const BigInt& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0; }

BigInt gcd_of(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
BigInt pollard_rho(const BigInt& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x, q = 1, g = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 64;
    auto step = [&](const BigInt& v) {
      BigInt w = v * v + c;
      mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
      return w;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          BigInt diff = x - y;
          q = q * abs(diff);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        g = gcd_of(q, n);
        k += m;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        BigInt diff = x - ys;
        g = gcd_of(abs(diff), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_into(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  const BigInt d = pollard_rho(n);
  split_into(d, out);
  split_into(n / d, out);
}

}  // namespace

std::vector<std::pair<BigInt, unsigned>> factor_integer(const BigInt& value) {
  if (value == 0) throw PreconditionError("factor_integer(0)");
  BigInt n = abs(value);
  std::map<BigInt, unsigned> primes;
  constexpr unsigned long kTrialLimit = 10000;
  for (unsigned long p = 2; p <= kTrialLimit && n > 1; p += (p == 2 ? 1 : 2)) {
    if (BigInt(p) * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      ++primes[BigInt(p)];
      n /= p;
    }
  }
  split_into(n, primes);
  return {primes.begin(), primes.end()};
}

std::vector<BigInt> positive_divisors(const BigInt& n) {
  std::vector<BigInt> divisors{1};
  for (const auto& [prime, exponent] : factor_integer(n)) {
    const std::size_t base = divisors.size();
    BigInt power = 1;
    for (unsigned e = 1; e <= exponent; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * power);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

}  // namespace octic
