#pragma once

#include <map>
#include <utility>

#include "zetasum/hpreal.hpp"
#include "zetasum/rational.hpp"

namespace zetasum {

// Truncated large-n asymptotic form sum_{(a,b)} c_{a,b} ln^a(n) n^-b.
// Keys are (log power a, inverse power b); coefficients carry the working
// digit budget of the engine that built them.
using Expansion = std::map<std::pair<int, int>, HPReal>;

void expansion_accumulate(Expansion& e, int a, int b, const HPReal& c);
// dst += scale * src
void expansion_add_scaled(Expansion& dst, const Expansion& src, const HPReal& scale);
// Product, dropping terms with inverse power above bmax.
Expansion expansion_mul(const Expansion& x, const Expansion& y, int bmax);
// Multiply by n^-s.
Expansion expansion_shift_power(const Expansion& e, int s);
// Rewrite f(n-1) as an expansion in n, using ln(n-1) = ln n - sum n^-i/i and
// (n-1)^-b = sum C(b+i-1,i) n^-(b+i), truncated at bmax.
Expansion expansion_shift_back(const Expansion& e, int bmax);
// Evaluate the finite form at n = N.
HPReal expansion_value_at(const Expansion& e, long N, int digits);

// Euler-Maclaurin completion of sum_{m>n} ln^a(m) m^-b for b >= 2, with L
// correction terms: the integral term, the -f(n)/2 boundary term, and
// -B_2j/(2j)! f^(2j-1)(n) for j = 1..L. Exact rational coefficients on
// ln^a'(n) n^-b' monomials, truncated at inverse power bmax.
std::map<std::pair<int, int>, Rational> em_tail_symbolic(int a, int b, int L, int bmax);
// The same tail evaluated at n = N.
HPReal em_tail_value(int a, int b, long N, int L, int digits);

// Asymptotics of H_n: ln n + gamma + 1/(2n) - sum B_2j/(2j) n^-2j.
Expansion harmonic_asymptotics(int bmax, int L, int digits);
// Asymptotics of zeta_n(t) for t >= 2: zeta(t) minus the symbolic tail.
Expansion zn_asymptotics(int t, int bmax, int L, int digits);

} // namespace zetasum
