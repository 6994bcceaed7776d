#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "zetasum/algebra.hpp"
#include "zetasum/composition.hpp"
#include "zetasum/expansion.hpp"
#include "zetasum/hpreal.hpp"
#include "zetasum/rational.hpp"

namespace zetasum {

inline constexpr int default_direct_digits = 12;      // direct-series checks
inline constexpr int default_closed_form_digits = 30; // closed-form evaluation
inline constexpr long max_direct_cutoff = 10000000L;
inline constexpr int em_correction_order = 8;
inline constexpr int max_mzv_depth = 6;
inline constexpr int max_mzv_weight = 12;
// Inverse powers carried beyond a term's base decay when building tails.
inline constexpr int tail_extra_powers = 22;

// Direct-summation cutoff chosen from the digit budget; Euler-Maclaurin
// completion makes a few hundred terms enough for double-digit budgets.
long default_cutoff(int digits);

// Process-wide override of the automatic cutoff: a positive value makes
// default_cutoff return it unconditionally, 0 restores the digit-based
// choice. Out-of-range values (negative or above max_direct_cutoff) throw.
void set_cutoff_override(long n_max);
long cutoff_override();

// One series sum_{n>=1} t(n).
//
// `term` returns the exact value of t(n); it is invoked once for each
// n = 1..N in increasing order, so it may carry running state (prefix
// harmonic numbers and the like).
//
// `decay` declares |t(n)| = Theta(ln^a n / n^b) as (log power a, power b);
// b >= 2 is required for convergence.
//
// `tail` is the large-n asymptotic form of t(n), used to complete the sum
// beyond the cutoff. Monomials with inverse power < 2 must have negligible
// coefficients (they are dropped); otherwise the series is treated as
// divergent.
struct SeriesSpec {
    std::function<Rational(long)> term;
    std::pair<int, int> decay{0, 2};
    Expansion tail;
    long cutoff = 0; // 0: choose from the digit budget
};

HPReal sum_series(const SeriesSpec& spec, int digits);

// S_{p,q} = sum_n zeta_n(p) / n^q
HPReal linear_sum(int p, int q, int digits, long cutoff = 0);
// S_{S,q} = sum_n prod_i zeta_n(s_i) / n^q
HPReal euler_sum(const std::vector<int>& s, int q, int digits, long cutoff = 0);
// zeta(s), s admissible, depth <= 6, weight <= 12
HPReal mzv(const Composition& s, int digits, long cutoff = 0);
// zeta*(s) via the contraction expansion into mzv values
HPReal mzv_star(const Composition& s, int digits, long cutoff = 0);

// Large-n asymptotics of zeta_n(s) (strict) and zeta*_n(s) (weak) as
// ln-power / inverse-power expansions truncated at inverse power bmax;
// building blocks for SeriesSpec tails of sums whose terms carry these
// factors. Parts must be >= 1 and s must fit the depth/weight envelope.
Expansion mhn_asymptotics(const Composition& s, int bmax, int digits);
Expansion mhn_star_asymptotics(const Composition& s, int bmax, int digits);

// Expansion of (n+a)^-e in n for e >= 1 (binomial series, valid for
// n > |a|), truncated at inverse power bmax.
Expansion shifted_power_asymptotics(long a, int e, int bmax, int digits);
// sum_{n>=1} (n+a)^-t for t >= 2, rational a >= 0
HPReal hurwitz_zeta(int t, const Rational& a, int digits);
// Shifted-argument analogues summing over n >= m_1 > ... with n -> n+a;
// restricted to words with every part >= 2 (log-free asymptotics).
HPReal hurwitz_mzv(const Composition& s, const Rational& a, int digits, long cutoff = 0);
HPReal hurwitz_mzv_star(const Composition& s, const Rational& a, int digits, long cutoff = 0);

// Numeric context: resolves atoms (zeta values, S(p,q) sums, formal MZVs) at
// a fixed digit budget, memoizing by the atom's printed form. Values may be
// seeded from a constants cache before use.
class NumericEnv {
public:
    explicit NumericEnv(int digits);
    int digits() const { return digits_; }
    const HPReal& atom_value(const Atom& at);
    void seed(const std::string& atom_text, const HPReal& value);
    bool has(const std::string& atom_text) const;
    HPReal eval(const AlgebraElement& e);

private:
    int digits_;
    std::map<std::string, HPReal> values_;
};

// Exact coefficients times memoized atom values, summed at the env's budget.
HPReal eval_algebra(const AlgebraElement& e, NumericEnv& env);

} // namespace zetasum
