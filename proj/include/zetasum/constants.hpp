#pragma once

#include "zetasum/hpreal.hpp"
#include "zetasum/rational.hpp"

namespace zetasum {

// Bernoulli number B_k with the B_1 = -1/2 convention (the sign matters in
// every Euler-Maclaurin correction below); memoized.
Rational bernoulli(unsigned long k);

// Euler-Mascheroni constant via Euler-Maclaurin applied to H_N - ln N, with
// N chosen from the digit budget. Budgets above max_gamma_digits raise
// precision_error.
inline constexpr int max_gamma_digits = 50;
HPReal euler_gamma(int digits);

// zeta(k) for integer k >= 2: direct summation to a budget-derived cutoff
// plus Euler-Maclaurin tail completion; memoized per (k, digits).
// k < 2 raises divergence_error.
HPReal riemann_zeta(int k, int digits);

// Internal knob exposed for self-consistency tests: same computation with an
// explicit summation cutoff N (no memoization).
HPReal riemann_zeta_with_cutoff(int k, int digits, long cutoff);
HPReal euler_gamma_with_cutoff(int digits, long cutoff);

// Inserts a precomputed value into the process-wide memo under the exact
// (k, digits) resp. digits key, replacing any existing entry. Used by the
// cache loader; callers are responsible for the value actually being
// accurate to the stated budget.
void seed_riemann_zeta(int k, int digits, const HPReal& value);
void seed_euler_gamma(int digits, const HPReal& value);

} // namespace zetasum
