#pragma once

#include "zetasum/algebra.hpp"

namespace zetasum {

// Exact zeta-polynomial value of
//   W(m, k) = int_0^1 ln^k(1-x) ln^m(x) / (1-x) dx,  m >= 1, k >= 0.
// Every output is weight-homogeneous of weight m + k + 1. Values are
// memoized across calls.
AlgebraElement w_integral(int m, int k);

// zeta(m+2, {1}_(k-1)) as a zeta polynomial, via
// zeta(m+2, {1}_(k-1)) = (-1)^(m+k) W(k, m) / (m! k!). Requires m >= 0,
// k >= 1; m = 0 gives zeta(2, {1}_(k-1)) = zeta(k+1).
AlgebraElement hook_mzv(int m, int k);

// Integration-by-parts duality W(m, k-1) == (m/k) W(k, m-1) for m, k >= 1,
// tested as exact symbolic equality.
bool w_dual_check(int m, int k);

} // namespace zetasum
