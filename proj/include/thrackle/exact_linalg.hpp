#pragma once

#include <optional>
#include <vector>

#include "thrackle/numeric.hpp"

namespace thrackle {

using IntMatrix = std::vector<std::vector<BigInt>>;

// Exact determinant of a square integer matrix by fraction-free (Bareiss)
// elimination; all intermediate divisions are exact.
BigInt det_bareiss(IntMatrix m);

// Exact rank of an arbitrary integer matrix, by fraction-free elimination
// with full pivot search.
int rank_bareiss(IntMatrix m);

// Solves the square system a*x = b over the rationals by Gaussian
// elimination with exact arithmetic.  Returns nullopt when a is singular.
std::optional<std::vector<Rational>> solve_rational(std::vector<std::vector<Rational>> a,
                                                    std::vector<Rational> b);

}  // namespace thrackle
