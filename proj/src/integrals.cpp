#include "zetasum/integrals.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zetasum/combinatorics.hpp"
#include "zetasum/composition.hpp"

namespace zetasum {

namespace {

Rational neg_one_pow(int e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

Rational fact(int n) { return Rational(factorial(static_cast<unsigned long>(n))); }

Rational binom(int n, int k) {
    return Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
}

Rational rational_pow(const Rational& x, long e) {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), x.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), x.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Memoized builder for the two-log moments at a fixed n.
struct DualLogBuilder {
    long n;
    std::map<std::pair<int, int>, AlgebraElement> memo;

    explicit DualLogBuilder(long n_) : n(n_) {}

    // zeta_n(t) - zeta(t): exact rational head minus the formal zeta atom.
    AlgebraElement zn_minus_zeta(int t) const {
        return ael_const(harmonic(n, t)) - ael_zeta(t);
    }

    const AlgebraElement& get(int m, int k) {
        const auto key = std::make_pair(m, k);
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        AlgebraElement e;
        if (k == 0) {
            // int_0^1 x^(n-1) ln^m(x) dx = (-1)^m m! / n^(m+1)
            e = ael_const(neg_one_pow(m) * fact(m) *
                          inv_power(static_cast<unsigned long>(n),
                                    static_cast<unsigned long>(m + 1)));
        } else if (m == 0) {
            // Peeling one ln(1-x) factor by parts leaves lower pure powers
            // against multiple harmonic weights:
            // I(n,0,k) = sum_{i<k} (-1)^(k-i) (k-i-1)! C(k-1,i) I(n,0,i)
            //            zeta_n(k-i)
            for (int i = 0; i <= k - 1; ++i) {
                e += get(0, i) * (neg_one_pow(k - i) * fact(k - i - 1) *
                                  binom(k - 1, i) * harmonic(n, k - i));
            }
        } else {
            // m, k >= 1: the full two-sided reduction. First sum lowers the
            // ln(x) power at fixed k, the other two lower the ln(1-x) power,
            // each weighted by tails zeta_n(t) - zeta(t).
            for (int i = 0; i <= m - 1; ++i) {
                e += get(i, k) * (binom(m - 1, i) * fact(m - i - 1) *
                                  neg_one_pow(m - i) *
                                  inv_power(static_cast<unsigned long>(n),
                                            static_cast<unsigned long>(m - i)));
            }
            for (int j = 0; j <= k - 1; ++j) {
                e += (zn_minus_zeta(m + k - j) * get(0, j)) *
                     (binom(k, j) * neg_one_pow(m + k - j) * fact(m + k - j - 1));
            }
            for (int i = 1; i <= m - 1; ++i) {
                for (int j = 0; j <= k - 1; ++j) {
                    e += (zn_minus_zeta(m + k - i - j) * get(i, j)) *
                         (binom(m - 1, i) * binom(k, j) *
                          neg_one_pow(m + k - i - j) * fact(m + k - i - j - 1));
                }
            }
        }
        return memo.emplace(key, std::move(e)).first->second;
    }
};

} // namespace

AlgebraElement dual_log_moment(long n, int m, int k) {
    if (n < 1 || m < 0 || k < 0) {
        throw std::domain_error("dual_log_moment requires n >= 1 and m, k >= 0");
    }
    DualLogBuilder b(n);
    return b.get(m, k);
}

HPReal log1m_moment(long n, int m, const Rational& x, int digits) {
    if (n < 1 || m < 1) throw std::domain_error("log1m_moment requires n >= 1, m >= 1");
    if (x >= 1 || x < -1) throw std::domain_error("log1m_moment requires x in [-1, 1)");
    if (x == 0) return HPReal::zero(digits);
    const int wd = digits + 10;

    // Weak nested chains F_i(t) = sum_{1<=k_i<=...<=k_1<=t} x^(k_i)/(k_1...k_i)
    // with the power on the innermost index: F_1(t) = sum_{k<=t} x^k/k and
    // F_(i+1)(t) = sum_{K<=t} F_i(K)/K, filled jointly over t.
    std::vector<Rational> F(static_cast<size_t>(m) + 1, Rational(0));
    Rational xp(1);
    for (long t = 1; t <= n; ++t) {
        xp *= x;
        F[1] += xp / t;
        for (int i = 2; i <= m; ++i) {
            F[static_cast<size_t>(i)] += F[static_cast<size_t>(i - 1)] / t;
        }
    }
    const Rational xn = xp; // x^n

    const HPReal L = ln(HPReal::from_rational(Rational(1) - x, wd));
    HPReal total = pow_si(L, m) * ((xn - Rational(1)) / Rational(n));
    total += HPReal::from_rational(
        neg_one_pow(m) * fact(m) * F[static_cast<size_t>(m)] / n, wd);
    for (int i = 1; i <= m - 1; ++i) {
        const Rational Q = F[static_cast<size_t>(i)] - mhn_star(n, ones(i));
        total -= pow_si(L, m - i) * (neg_one_pow(i - 1) * fact(i) * binom(m, i) * Q / n);
    }
    return with_digits(total, digits);
}

HPReal power_log_moment(long n, int m, const Rational& x, int digits) {
    if (n < 1 || m < 0) throw std::domain_error("power_log_moment requires n >= 1, m >= 0");
    if (x <= 0 || x > 1) throw std::domain_error("power_log_moment requires x in (0, 1]");
    const int wd = digits + 10;
    const Rational xn = rational_pow(x, n);
    const HPReal lx = ln(HPReal::from_rational(x, wd));
    HPReal total = HPReal::zero(wd);
    for (int l = 0; l <= m; ++l) {
        total += pow_si(lx, m - l) *
                 (fact(l) * binom(m, l) * neg_one_pow(l) * xn *
                  inv_power(static_cast<unsigned long>(n),
                            static_cast<unsigned long>(l + 1)));
    }
    return with_digits(total, digits);
}

AlgebraElement li_moment(long n, int p) {
    if (n < 1 || p < 1) throw std::domain_error("li_moment requires n >= 1, p >= 1");
    AlgebraElement e;
    for (int i = 1; i <= p - 1; ++i) {
        e += ael_zeta(p + 1 - i) *
             (neg_one_pow(i - 1) * inv_power(static_cast<unsigned long>(n),
                                             static_cast<unsigned long>(i)));
    }
    e += ael_const(neg_one_pow(p - 1) * harmonic(n, 1) *
                   inv_power(static_cast<unsigned long>(n), static_cast<unsigned long>(p)));
    return e;
}

AlgebraElement li_log_moment(long n, int m, int p) {
    if (n < 1 || p < 1 || m < 0) {
        throw std::domain_error("li_log_moment requires n >= 1, p >= 1, m >= 0");
    }
    if (m == 0) return li_moment(n, p);

    AlgebraElement e;
    for (int i = 1; i <= p - 1; ++i) {
        e += li_log_moment(n, m - 1, p + 1 - i) *
             (Rational(m) * neg_one_pow(i) *
              inv_power(static_cast<unsigned long>(n), static_cast<unsigned long>(i)));
    }
    // Tail bracket: zeta_n(m+1) + H_n/n^m
    //               - sum_{j=1}^{m-1} (zeta(j+1) - zeta_n(j+1)) / n^(m-j)
    //               - zeta(m+1)
    AlgebraElement bracket =
        ael_const(harmonic(n, m + 1) +
                  harmonic(n, 1) * inv_power(static_cast<unsigned long>(n),
                                             static_cast<unsigned long>(m))) -
        ael_zeta(m + 1);
    for (int j = 1; j <= m - 1; ++j) {
        bracket -= (ael_zeta(j + 1) - ael_const(harmonic(n, j + 1))) *
                   inv_power(static_cast<unsigned long>(n),
                             static_cast<unsigned long>(m - j));
    }
    e += bracket * (fact(m) * neg_one_pow(m + p - 1) *
                    inv_power(static_cast<unsigned long>(n), static_cast<unsigned long>(p)));
    return e;
}

} // namespace zetasum
