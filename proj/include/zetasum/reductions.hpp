#pragma once

#include <map>
#include <optional>
#include <string>

#include "zetasum/algebra.hpp"
#include "zetasum/composition.hpp"

namespace zetasum {

// Closed forms for the small multiple zeta values of weight <= 9 that feed
// the Euler-sum evaluations but are not hook-shaped, keyed by canonical
// composition text. The two irreducible atoms are S(2,6) and S(2,8). The
// hook-shaped entries present here duplicate what hook_mzv produces and are
// kept as cross-validation data.
const std::map<std::string, AlgebraElement>& mzv_reduction_table();

// Reduce zeta(s) to a polynomial in zeta values / S atoms when a route
// exists: the empty index (1), depth 1, hook shape (a, {1}_t), power shape
// ({p}_t), or a table entry. Returns nothing otherwise.
std::optional<AlgebraElement> known_mzv(const Composition& s);

// Substitute every reducible M atom appearing in e.
AlgebraElement reduce_known_mzvs(const AlgebraElement& e);

// zeta*(p+1, {1}_m), p >= 1, m >= 1: assembled from hook zeta polynomials
// plus the interior words (m+1, {1}_(i-1), 2, {1}_(p-1-i)). Interior words
// reduce through known_mzv when possible, directly or after the index-swap
// rewrite of the whole interior sum; any still-unknown word stays a formal
// M atom.
AlgebraElement star_hook(int p, int m);

// zeta({p}_m) and zeta*({p}_m) by the one-term-history recurrences
//   m zeta({p}_m)  = (-1)^(m-1) sum_{i<m} (-1)^i zeta({p}_i)  zeta(pm-pi)
//   m zeta*({p}_m) =            sum_{i<m}        zeta*({p}_i) zeta(pm-pi)
// with the m = 0 value 1. Requires p >= 2.
AlgebraElement power_zeta(int p, int m);
AlgebraElement power_zeta_star(int p, int m);

// H(m,p) = sum_{a+b=m-1} zeta({p}_a, p+1, {p}_b) and its star analogue,
// m >= 1, p >= 2, via their recurrences over power_zeta / power_zeta_star.
AlgebraElement h_sum(int m, int p);
AlgebraElement h_star_sum(int m, int p);

} // namespace zetasum
