#include "zetasum/expansion.hpp"

#include <stdexcept>

#include "zetasum/constants.hpp"

namespace zetasum {

namespace {

using PureSeries = std::map<int, Rational>; // sum c_i n^-i, no logs

PureSeries pure_mul(const PureSeries& x, const PureSeries& y, int cap) {
    PureSeries out;
    for (const auto& [i, ci] : x) {
        for (const auto& [j, cj] : y) {
            if (i + j > cap) continue;
            out[i + j] += ci * cj;
        }
    }
    return out;
}

// Derivative in n of a rational combination of ln^a(n) n^-b monomials.
std::map<std::pair<int, int>, Rational>
log_power_derivative(const std::map<std::pair<int, int>, Rational>& f) {
    std::map<std::pair<int, int>, Rational> out;
    for (const auto& [key, c] : f) {
        const auto [a, b] = key;
        if (a > 0) out[{a - 1, b + 1}] += c * a;
        out[{a, b + 1}] -= c * b;
    }
    return out;
}

} // namespace

void expansion_accumulate(Expansion& e, int a, int b, const HPReal& c) {
    auto [it, inserted] = e.try_emplace({a, b}, c);
    if (!inserted) it->second += c;
}

void expansion_add_scaled(Expansion& dst, const Expansion& src, const HPReal& scale) {
    for (const auto& [key, c] : src) {
        expansion_accumulate(dst, key.first, key.second, c * scale);
    }
}

Expansion expansion_mul(const Expansion& x, const Expansion& y, int bmax) {
    Expansion out;
    for (const auto& [kx, cx] : x) {
        for (const auto& [ky, cy] : y) {
            const int b = kx.second + ky.second;
            if (b > bmax) continue;
            expansion_accumulate(out, kx.first + ky.first, b, cx * cy);
        }
    }
    return out;
}

Expansion expansion_shift_power(const Expansion& e, int s) {
    Expansion out;
    for (const auto& [key, c] : e) {
        out[{key.first, key.second + s}] = c;
    }
    return out;
}

Expansion expansion_shift_back(const Expansion& e, int bmax) {
    // delta = ln(1 - 1/n) = -sum_{i>=1} n^-i / i
    PureSeries delta;
    for (int i = 1; i <= bmax; ++i) delta[i] = rat(-1, i);

    Expansion out;
    for (const auto& [key, c] : e) {
        const auto [a, b] = key;
        if (b > bmax) continue;
        // (n-1)^-b = n^-b (1 - 1/n)^-b,  (1 - 1/n)^-b = sum C(b+i-1,i) n^-i
        PureSeries binser;
        if (b > 0) {
            for (int i = 0; i + b <= bmax; ++i) {
                binser[i] = Rational(binomial(b + i - 1, i));
            }
        } else {
            binser[0] = rat(1);
        }
        // ln^a(n-1) = (ln n + delta)^a, expanded binomially
        PureSeries deltapow;
        deltapow[0] = rat(1);
        for (int t = 0; t <= a; ++t) {
            const Rational cbin = Rational(binomial(a, t));
            for (const auto& [i, cc] : pure_mul(deltapow, binser, bmax - b)) {
                expansion_accumulate(out, a - t, b + i, c * (cbin * cc));
            }
            if (t < a) deltapow = pure_mul(deltapow, delta, bmax - b);
        }
    }
    return out;
}

HPReal expansion_value_at(const Expansion& e, long N, int digits) {
    const HPReal n = HPReal::from_long(N, digits);
    const HPReal logn = ln(n);
    HPReal total = HPReal::zero(digits);
    for (const auto& [key, c] : e) {
        const auto [a, b] = key;
        HPReal term = c;
        for (int i = 0; i < a; ++i) term *= logn;
        if (b != 0) term *= pow_si(n, -b);
        total += term;
    }
    return total;
}

std::map<std::pair<int, int>, Rational> em_tail_symbolic(int a, int b, int L, int bmax) {
    if (b < 2) throw std::domain_error("em_tail_symbolic: inverse power must be >= 2");
    std::map<std::pair<int, int>, Rational> tail;
    // integral: int_n^inf ln^a(x) x^-b dx = sum_i (a)_i ln^(a-i)(n) n^(1-b) / (b-1)^(i+1)
    Rational fall(1);
    for (int i = 0; i <= a; ++i) {
        if (b - 1 <= bmax) {
            Rational denom(1);
            for (int j = 0; j <= i; ++j) denom *= b - 1;
            tail[{a - i, b - 1}] += fall / denom;
        }
        fall *= a - i;
    }
    // boundary: -f(n)/2
    if (b <= bmax) tail[{a, b}] -= rat(1, 2);
    // corrections: -B_2j/(2j)! f^(2j-1)(n)
    std::map<std::pair<int, int>, Rational> der;
    der[{a, b}] = rat(1);
    Rational fact(1);
    for (int j = 1; j <= L; ++j) {
        der = log_power_derivative(der);
        fact *= 2 * j - 1;
        fact *= 2 * j;
        const Rational coeff = bernoulli(2 * static_cast<unsigned long>(j)) / fact;
        for (const auto& [key, c] : der) {
            if (key.second > bmax) continue;
            tail[key] -= coeff * c;
        }
        der = log_power_derivative(der);
    }
    return tail;
}

HPReal em_tail_value(int a, int b, long N, int L, int digits) {
    const auto sym = em_tail_symbolic(a, b, L, b + 2 * L + 2);
    const HPReal n = HPReal::from_long(N, digits);
    const HPReal logn = ln(n);
    HPReal total = HPReal::zero(digits);
    for (const auto& [key, c] : sym) {
        HPReal term = HPReal::from_rational(c, digits);
        for (int i = 0; i < key.first; ++i) term *= logn;
        if (key.second != 0) term *= pow_si(n, -key.second);
        total += term;
    }
    return total;
}

Expansion harmonic_asymptotics(int bmax, int L, int digits) {
    Expansion e;
    e[{1, 0}] = HPReal::one(digits);
    e[{0, 0}] = euler_gamma(digits);
    if (bmax >= 1) e[{0, 1}] = HPReal::from_rational(rat(1, 2), digits);
    for (int j = 1; 2 * j <= bmax && j <= L; ++j) {
        const Rational c = bernoulli(2 * static_cast<unsigned long>(j)) / (2 * j);
        e[{0, 2 * j}] = HPReal::from_rational(-c, digits);
    }
    return e;
}

Expansion zn_asymptotics(int t, int bmax, int L, int digits) {
    Expansion e;
    e[{0, 0}] = riemann_zeta(t, digits);
    for (const auto& [key, c] : em_tail_symbolic(0, t, L, bmax)) {
        expansion_accumulate(e, key.first, key.second, HPReal::from_rational(-c, digits));
    }
    return e;
}

} // namespace zetasum
