#pragma once

#include <utility>
#include <vector>

#include "octic/rational.hpp"

namespace octic {

// Prime factorization of |n| as (prime, exponent) pairs in increasing order.
// Trial division for small primes, Pollard rho for what remains.
std::vector<std::pair<BigInt, unsigned>> factor_integer(const BigInt& n);

// All positive divisors of |n| in increasing order; n must be nonzero.
std::vector<BigInt> positive_divisors(const BigInt& n);

}  // namespace octic
