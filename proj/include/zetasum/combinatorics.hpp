#pragma once

#include <vector>

#include "zetasum/composition.hpp"
#include "zetasum/rational.hpp"

namespace zetasum {

// Generalized harmonic number zeta_n(p) = sum_{j=1..n} j^-p, exact;
// zeta_0(p) = 0 by convention.
Rational harmonic(long n, int p);

// Multiple harmonic number: strict nested sum over n >= n_1 > ... > n_k >= 1.
// Returns 0 when n < depth and 1 for the empty index.
Rational mhn(long n, const Composition& s);
// Star variant: weak inequalities n >= n_1 >= ... >= n_k >= 1.
Rational mhn_star(long n, const Composition& s);

// Unsigned Stirling number of the first kind via
// s(n,k) = s(n-1,k-1) + (n-1) s(n-1,k); rows memoized up to a configurable
// cap, larger n served by the exact identity s(n,k) = (n-1)! zeta_{n-1}({1}_{k-1}).
Integer stirling1(unsigned long n, unsigned long k);
void set_stirling1_cap(unsigned long n_max);

// Complete Bell polynomial Y_k(n) at x_r = (r-1)! zeta_n(r), via
// Y_{k+1} = sum_{i=0..k} C(k,i) Y_{k-i} x_{i+1}.
Rational bell_Y(int k, long n);

// Power-sum/nested-sum sequence pairs over caller-supplied x_1..x_n
// (xs.size() >= n required). A and Abar follow their defining recurrences;
// B is the weak nested sum, Bbar the strict one, evaluated directly so the
// pair can serve as recurrence-vs-definition cross-checks.
Rational seq_A(int m, long n, const std::vector<Rational>& xs);
Rational seq_B(int m, long n, const std::vector<Rational>& xs);
Rational seq_Abar(int m, long n, const std::vector<Rational>& xs);
Rational seq_Bbar(int m, long n, const std::vector<Rational>& xs);

} // namespace zetasum
