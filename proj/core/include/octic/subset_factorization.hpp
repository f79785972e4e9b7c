#pragma once

#include <vector>

#include "octic/polynomial.hpp"

namespace octic {

// Irreducible factorization pattern of a polynomial over Q.
struct FactorPattern {
  std::vector<int> degrees;     // sorted
  std::vector<UniPoly> factors;  // monic, sorted by degree then coefficients
};

struct SubsetFactorizationOptions {
  unsigned initial_digits = 60;
  int max_doublings = 8;
};

// Complete factorization of a squarefree p with 1 <= deg p <= max_degree <= 16.
//
// Complex roots are enclosed numerically and root subsets of increasing size
// propose integer factors by rounding; a factor is accepted only after exact
// division, so the result is exact whatever the numeric path. Throws
// PrecisionError if the precision cap is reached before certification.
FactorPattern subset_factorization(const UniPoly& p, int max_degree = 16,
                                   const SubsetFactorizationOptions& options = {});

}  // namespace octic
