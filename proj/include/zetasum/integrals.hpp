#pragma once

#include "zetasum/algebra.hpp"
#include "zetasum/hpreal.hpp"
#include "zetasum/rational.hpp"

namespace zetasum {

// Exact value of int_0^1 x^(n-1) ln^m(x) ln^k(1-x) dx as an algebra element
// whose only atoms are plain zeta values; all harmonic-number content at the
// concrete n is folded into the rational coefficients.
AlgebraElement dual_log_moment(long n, int m, int k);

// int_0^x t^(n-1) ln^m(1-t) dt for rational x in [-1, 1), m >= 1, at the
// digit budget: exact nested rational chains times ln(1-x) powers. x = 1 is
// rejected; the x -> 1 limit is m! (-1)^m zeta*_n({1}_m) / n.
HPReal log1m_moment(long n, int m, const Rational& x, int digits);

// int_0^x t^(n-1) ln^m(t) dt for rational 0 < x <= 1.
HPReal power_log_moment(long n, int m, const Rational& x, int digits);

// int_0^1 x^(n-1) Li_p(x) dx, exact element (atoms: zeta values), p >= 1.
AlgebraElement li_moment(long n, int p);
// int_0^1 x^(n-1) ln^m(x) Li_p(x) dx via the recurrence in m; m = 0 is
// li_moment.
AlgebraElement li_log_moment(long n, int m, int p);

} // namespace zetasum
