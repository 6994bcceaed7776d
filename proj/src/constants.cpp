#include "zetasum/constants.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "zetasum/errors.hpp"

namespace zetasum {

namespace {

Rational inv_pow(long base, unsigned long e) {
    return inv_power(static_cast<unsigned long>(base), e);
}

// 10^-(digits+8): truncation threshold leaving the guard digits intact.
HPReal em_threshold(int digits, int work_digits) {
    return HPReal::from_rational(inv_pow(10, static_cast<unsigned long>(digits + 8)),
                                 work_digits);
}

// Largest budget that the smallest correction term reached does support;
// used to report honest progress when a tail fails to converge.
int digits_supported(const HPReal& smallest, int requested, int work_digits) {
    for (int d = requested; d >= 1; --d)
        if (smallest < em_threshold(d, work_digits)) return d;
    return 0;
}

} // namespace

Rational bernoulli(unsigned long k) {
    static std::mutex mu;
    static std::vector<Rational> table{Rational(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (table.size() <= k) {
        unsigned long n = table.size();
        // sum_{j=0..n} C(n+1,j) B_j = 0 solved for B_n
        Rational acc(0);
        for (unsigned long j = 0; j < n; ++j)
            acc += Rational(binomial(n + 1, j)) * table[j];
        table.push_back(-acc / Rational(n + 1));
    }
    return table[k];
}

HPReal riemann_zeta_with_cutoff(int k, int digits, long cutoff) {
    if (k < 2) throw divergence_error("zeta(k) diverges for k < 2");
    if (digits < 1) digits = 1;
    int wd = digits + 10;
    HPReal acc = HPReal::zero(wd);
    for (long n = 1; n <= cutoff; ++n)
        acc += HPReal::from_rational(inv_pow(n, static_cast<unsigned long>(k)), wd);

    // Tail sum_{n>N} n^-k by Euler-Maclaurin:
    //   N^(1-k)/(k-1) - N^-k/2 + sum_j B_2j/(2j)! (k)_(2j-1) N^-(k+2j-1)
    unsigned long uk = static_cast<unsigned long>(k);
    acc += HPReal::from_rational(inv_pow(cutoff, uk - 1) / Rational(k - 1), wd);
    acc -= HPReal::from_rational(inv_pow(cutoff, uk) / Rational(2), wd);
    HPReal thresh = em_threshold(digits, wd);
    bool converged = false;
    HPReal smallest = HPReal::nan(wd);
    for (unsigned long j = 1; j <= 400; ++j) {
        Rational c = bernoulli(2 * j) * rising(Rational(k), 2 * j - 1) /
                     Rational(factorial(2 * j));
        HPReal term = HPReal::from_rational(c * inv_pow(cutoff, uk + 2 * j - 1), wd);
        acc += term;
        HPReal mag = abs(term);
        if (mag < thresh) {
            converged = true;
            break;
        }
        if (j == 1 || mag < smallest) smallest = mag;
    }
    if (!converged)
        throw precision_error("Euler-Maclaurin tail for zeta did not reach the "
                              "requested digits at this cutoff",
                              digits_supported(smallest, digits, wd));
    return with_digits(acc, digits);
}

namespace {
std::mutex zeta_mu;
std::map<std::pair<int, int>, HPReal> zeta_memo;
std::mutex gamma_mu;
std::map<int, HPReal> gamma_memo;
} // namespace

HPReal riemann_zeta(int k, int digits) {
    if (k < 2) throw divergence_error("zeta(k) diverges for k < 2");
    if (digits < 1) digits = 1;
    {
        std::lock_guard<std::mutex> lock(zeta_mu);
        auto it = zeta_memo.find({k, digits});
        if (it != zeta_memo.end()) return it->second;
    }
    long cutoff = std::max<long>(32, 2L * digits);
    HPReal v = riemann_zeta_with_cutoff(k, digits, cutoff);
    std::lock_guard<std::mutex> lock(zeta_mu);
    return zeta_memo.emplace(std::make_pair(k, digits), v).first->second;
}

void seed_riemann_zeta(int k, int digits, const HPReal& value) {
    if (k < 2) throw divergence_error("zeta(k) diverges for k < 2");
    std::lock_guard<std::mutex> lock(zeta_mu);
    zeta_memo.insert_or_assign({k, digits}, value);
}

HPReal euler_gamma_with_cutoff(int digits, long cutoff) {
    if (digits < 1) digits = 1;
    int wd = digits + 10;
    // gamma = H_N - ln N - 1/(2N) + sum_j B_2j/(2j) N^-2j; everything except
    // ln N stays exact rational.
    Rational r(0);
    for (long n = 1; n <= cutoff; ++n) r += Rational(1, n);
    r -= Rational(1, 2 * cutoff);
    HPReal thresh = em_threshold(digits, wd);
    bool converged = false;
    HPReal smallest = HPReal::nan(wd);
    for (unsigned long j = 1; j <= 400; ++j) {
        Rational term = bernoulli(2 * j) / Rational(2 * j) * inv_pow(cutoff, 2 * j);
        r += term;
        HPReal mag = HPReal::from_rational(abs(term), wd);
        if (mag < thresh) {
            converged = true;
            break;
        }
        if (j == 1 || mag < smallest) smallest = mag;
    }
    if (!converged)
        throw precision_error("Euler-Maclaurin series for gamma did not reach "
                              "the requested digits at this cutoff",
                              digits_supported(smallest, digits, wd));
    HPReal acc = HPReal::from_rational(r, wd) - ln(HPReal::from_long(cutoff, wd));
    return with_digits(acc, digits);
}

HPReal euler_gamma(int digits) {
    if (digits < 1) digits = 1;
    if (digits > max_gamma_digits)
        throw precision_error("gamma digit budget exceeds the configured maximum",
                              max_gamma_digits);
    {
        std::lock_guard<std::mutex> lock(gamma_mu);
        auto it = gamma_memo.find(digits);
        if (it != gamma_memo.end()) return it->second;
    }
    long cutoff = std::max<long>(40, 2L * digits);
    HPReal v = euler_gamma_with_cutoff(digits, cutoff);
    std::lock_guard<std::mutex> lock(gamma_mu);
    return gamma_memo.emplace(digits, v).first->second;
}

void seed_euler_gamma(int digits, const HPReal& value) {
    std::lock_guard<std::mutex> lock(gamma_mu);
    gamma_memo.insert_or_assign(digits, value);
}

} // namespace zetasum
