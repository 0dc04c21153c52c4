#pragma once

// Exact rank by fraction-free (Bareiss) elimination.

#include <cstddef>
#include <vector>

#include "bessel/rational.hpp"

namespace bessel::linalg {

using IntegerMatrix = std::vector<std::vector<Integer>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

// Rows may not be ragged.  Empty matrices have rank 0.
std::size_t rank(IntegerMatrix m);
// Each row is cleared of denominators first.
std::size_t rank(const RationalMatrix& m);

}  // namespace bessel::linalg
