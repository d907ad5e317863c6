#pragma once

// Internal: smallest m >= 1 with v_m = v_{2m} for the sequence v_k = L^{k-1} x
// of a linear map L over F_p. Reduces to the minimal polynomial g = t^a h of
// x under L: the answer is the least multiple of ord(t mod h) that is at
// least a + 1. The multiplicative order is computed through squarefree and
// distinct-degree factorization, so huge orders cost only a few polynomial
// exponentiations instead of an astronomically long iteration.

#include <cstdint>

#include "quivhom/matrix.hpp"

namespace quivhom {

uint64_t stable_power_index(const MatrixModP& l, const MatrixModP& x);

}  // namespace quivhom
