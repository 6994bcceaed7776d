#include "zetasum/wtable.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "zetasum/rational.hpp"

namespace zetasum {

namespace {

Rational neg_one_pow(int e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

Rational fact(int n) { return Rational(factorial(static_cast<unsigned long>(n))); }

Rational binom(int n, int k) {
    return Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
}

// psi^(j)(1) = (-1)^(j+1) j! zeta(j+1) for j >= 1.
AlgebraElement psi_at_one(int j) {
    return ael_zeta(j + 1) * (neg_one_pow(j + 1) * fact(j));
}

// zeta(3, {1}_t) = (t+2)/2 zeta(t+3) - 1/2 sum_{j=1}^t zeta(j+1) zeta(t+2-j).
AlgebraElement zeta3_ones(int t) {
    AlgebraElement e = ael_zeta(t + 3) * rat(t + 2, 2);
    for (int j = 1; j <= t; ++j) {
        e -= (ael_zeta(j + 1) * ael_zeta(t + 2 - j)) * rat(1, 2);
    }
    return e;
}

std::mutex g_w_mutex;
std::map<std::pair<int, int>, AlgebraElement> g_w_memo;

// Caller holds g_w_mutex; map references stay valid across inserts.
const AlgebraElement& compute_w(int m, int k) {
    const auto key = std::make_pair(m, k);
    if (auto it = g_w_memo.find(key); it != g_w_memo.end()) return it->second;

    AlgebraElement e;
    if (k == 0) {
        e = ael_zeta(m + 1) * (neg_one_pow(m) * fact(m));
    } else if (m == 1) {
        e = ael_zeta(k + 2) * (neg_one_pow(k + 1) * fact(k));
    } else if (k == 1) {
        // The recurrence below needs k >= 2 (its derivation integrates by
        // parts inside ln^k(1-x)), so the k = 1 column comes instead from
        // W(m, 1) = (-1)^(m+1) m! zeta(3, {1}_(m-1)).
        e = zeta3_ones(m - 1) * (neg_one_pow(m + 1) * fact(m));
    } else {
        // m, k >= 2:
        // W(m,k) = -psi^(m+k)(1)/(k+1)
        //          - sum_{i=1}^{m-1} sum_{j=0}^{k-1} C(m-1,i) C(k,j)
        //                W(i,j) psi^(m+k-i-j-1)(1);
        // every W(i,j) on the right has i < m, so induction on m closes.
        e = psi_at_one(m + k) * rat(-1, k + 1);
        for (int i = 1; i <= m - 1; ++i) {
            for (int j = 0; j <= k - 1; ++j) {
                e -= (compute_w(i, j) * psi_at_one(m + k - i - j - 1)) *
                     (binom(m - 1, i) * binom(k, j));
            }
        }
    }
    return g_w_memo.emplace(key, std::move(e)).first->second;
}

} // namespace

AlgebraElement w_integral(int m, int k) {
    if (m < 1 || k < 0) throw std::domain_error("w_integral requires m >= 1, k >= 0");
    std::lock_guard<std::mutex> lock(g_w_mutex);
    return compute_w(m, k);
}

AlgebraElement hook_mzv(int m, int k) {
    if (m < 0 || k < 1) throw std::domain_error("hook_mzv requires m >= 0, k >= 1");
    return w_integral(k, m) * (neg_one_pow(m + k) / (fact(m) * fact(k)));
}

bool w_dual_check(int m, int k) {
    if (m < 1 || k < 1) throw std::domain_error("w_dual_check requires m, k >= 1");
    return w_integral(m, k - 1) == scale(rat(m, k), w_integral(k, m - 1));
}

} // namespace zetasum
