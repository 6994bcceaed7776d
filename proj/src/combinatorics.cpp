#include "zetasum/combinatorics.hpp"

#include <mutex>
#include <stdexcept>

namespace zetasum {

Rational harmonic(long n, int p) {
    if (p < 1) throw std::domain_error("harmonic exponent must be >= 1");
    Rational acc(0);
    for (long j = 1; j <= n; ++j)
        acc += inv_power(static_cast<unsigned long>(j), static_cast<unsigned long>(p));
    return acc;
}

namespace {

// One ascending pass over the outer bound m. state[i] holds the nested sum
// whose outermost index runs up to the current m; state[depth] = 1. In the
// strict case state[i+1] must be read at its previous-m value, so the update
// runs with i ascending; in the weak case at its current-m value, i descending.
Rational nested_dp(long n, const Composition& s, bool strict) {
    int k = s.depth();
    if (k == 0) return Rational(1);
    if (n < 1) return Rational(0);
    std::vector<Rational> state(static_cast<size_t>(k) + 1, Rational(0));
    state[static_cast<size_t>(k)] = 1;
    for (long m = 1; m <= n; ++m) {
        if (strict) {
            for (int i = 0; i < k; ++i)
                state[static_cast<size_t>(i)] +=
                    state[static_cast<size_t>(i) + 1] *
                    inv_power(static_cast<unsigned long>(m),
                              static_cast<unsigned long>(s.parts[static_cast<size_t>(i)]));
        } else {
            for (int i = k - 1; i >= 0; --i)
                state[static_cast<size_t>(i)] +=
                    state[static_cast<size_t>(i) + 1] *
                    inv_power(static_cast<unsigned long>(m),
                              static_cast<unsigned long>(s.parts[static_cast<size_t>(i)]));
        }
    }
    return state[0];
}

} // namespace

Rational mhn(long n, const Composition& s) { return nested_dp(n, s, true); }

Rational mhn_star(long n, const Composition& s) { return nested_dp(n, s, false); }

namespace {
std::mutex stirling_mu;
unsigned long stirling_cap = 256;
std::vector<std::vector<Integer>> stirling_rows;
} // namespace

void set_stirling1_cap(unsigned long n_max) {
    std::lock_guard<std::mutex> lock(stirling_mu);
    stirling_cap = n_max;
}

Integer stirling1(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    if (n == 0) return 1;  // here k == 0
    if (k == 0) return 0;
    {
        std::lock_guard<std::mutex> lock(stirling_mu);
        if (n <= stirling_cap) {
            if (stirling_rows.empty()) stirling_rows.push_back({Integer(1)});
            while (stirling_rows.size() <= n) {
                unsigned long r = stirling_rows.size();
                const auto& prev = stirling_rows.back();
                std::vector<Integer> row(r + 1);
                row[0] = 0;
                for (unsigned long c = 1; c <= r; ++c) {
                    row[c] = (c <= r - 1 ? prev[c] * (r - 1) : Integer(0));
                    row[c] += (c - 1 <= r - 1 ? prev[c - 1] : Integer(0));
                }
                stirling_rows.push_back(std::move(row));
            }
            return stirling_rows[n][k];
        }
    }
    // Above the memo cap: s(n,k) = (n-1)! zeta_{n-1}({1}_{k-1}), always integral.
    Rational v = Rational(factorial(n - 1)) * mhn(static_cast<long>(n - 1), ones(static_cast<int>(k) - 1));
    return v.get_num();
}

Rational bell_Y(int k, long n) {
    if (k < 0) throw std::domain_error("bell_Y order must be >= 0");
    std::vector<Rational> x(static_cast<size_t>(k) + 1);
    for (int r = 1; r <= k; ++r)
        x[static_cast<size_t>(r)] =
            Rational(factorial(static_cast<unsigned long>(r) - 1)) * harmonic(n, r);
    std::vector<Rational> y(static_cast<size_t>(k) + 1);
    y[0] = 1;
    for (int j = 0; j < k; ++j) {
        Rational acc(0);
        for (int i = 0; i <= j; ++i)
            acc += Rational(binomial(static_cast<unsigned long>(j), static_cast<unsigned long>(i))) *
                   y[static_cast<size_t>(j - i)] * x[static_cast<size_t>(i) + 1];
        y[static_cast<size_t>(j) + 1] = acc;
    }
    return y[static_cast<size_t>(k)];
}

namespace {

std::vector<Rational> power_sums(int m, long n, const std::vector<Rational>& xs) {
    if (static_cast<long>(xs.size()) < n)
        throw std::invalid_argument("sequence needs n values but fewer were supplied");
    std::vector<Rational> p(static_cast<size_t>(m) + 1, Rational(0));
    for (long j = 1; j <= n; ++j) {
        Rational pw(1);
        for (int e = 1; e <= m; ++e) {
            pw *= xs[static_cast<size_t>(j) - 1];
            p[static_cast<size_t>(e)] += pw;
        }
    }
    return p;
}

Rational nested_product_sum(int m, long bound, const std::vector<Rational>& xs, bool strict) {
    if (m == 0) return Rational(1);
    Rational acc(0);
    for (long k = 1; k <= bound; ++k)
        acc += xs[static_cast<size_t>(k) - 1] *
               nested_product_sum(m - 1, strict ? k - 1 : k, xs, strict);
    return acc;
}

void check_arity(long n, const std::vector<Rational>& xs) {
    if (static_cast<long>(xs.size()) < n)
        throw std::invalid_argument("sequence needs n values but fewer were supplied");
}

} // namespace

Rational seq_A(int m, long n, const std::vector<Rational>& xs) {
    if (m < 0) throw std::domain_error("sequence order must be >= 0");
    auto p = power_sums(m, n, xs);
    std::vector<Rational> a(static_cast<size_t>(m) + 1);
    a[0] = 1;
    for (int j = 1; j <= m; ++j) {
        Rational acc(0);
        for (int i = 0; i < j; ++i)
            acc += a[static_cast<size_t>(i)] / Rational(factorial(static_cast<unsigned long>(i))) *
                   p[static_cast<size_t>(j - i)];
        a[static_cast<size_t>(j)] = Rational(factorial(static_cast<unsigned long>(j) - 1)) * acc;
    }
    return a[static_cast<size_t>(m)];
}

Rational seq_Abar(int m, long n, const std::vector<Rational>& xs) {
    if (m < 0) throw std::domain_error("sequence order must be >= 0");
    auto p = power_sums(m, n, xs);
    std::vector<Rational> a(static_cast<size_t>(m) + 1);
    a[0] = 1;
    for (int j = 1; j <= m; ++j) {
        Rational acc(0);
        for (int i = 0; i < j; ++i) {
            Rational term = a[static_cast<size_t>(i)] /
                            Rational(factorial(static_cast<unsigned long>(i))) *
                            p[static_cast<size_t>(j - i)];
            acc += (i % 2 == 0) ? term : -term;
        }
        Rational scaled = Rational(factorial(static_cast<unsigned long>(j) - 1)) * acc;
        a[static_cast<size_t>(j)] = (j % 2 == 1) ? scaled : -scaled;
    }
    return a[static_cast<size_t>(m)];
}

Rational seq_B(int m, long n, const std::vector<Rational>& xs) {
    if (m < 0) throw std::domain_error("sequence order must be >= 0");
    check_arity(n, xs);
    return nested_product_sum(m, n, xs, false);
}

Rational seq_Bbar(int m, long n, const std::vector<Rational>& xs) {
    if (m < 0) throw std::domain_error("sequence order must be >= 0");
    check_arity(n, xs);
    return nested_product_sum(m, n, xs, true);
}

} // namespace zetasum
