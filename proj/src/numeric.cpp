#include "zetasum/numeric.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "zetasum/combinatorics.hpp"
#include "zetasum/constants.hpp"
#include "zetasum/errors.hpp"

namespace zetasum {

namespace {

int working_digits(int digits) { return digits + 10; }

HPReal pow10_neg(int k, int digits) {
    return HPReal::from_rational(inv_power(10, static_cast<unsigned long>(k)), digits);
}

// Quasi-shuffle (stuffle) product of two index words.
std::map<std::vector<int>, long> quasi_shuffle(const std::vector<int>& w1,
                                               const std::vector<int>& w2) {
    std::map<std::vector<int>, long> out;
    if (w1.empty()) {
        out[w2] = 1;
        return out;
    }
    if (w2.empty()) {
        out[w1] = 1;
        return out;
    }
    const std::vector<int> u(w1.begin() + 1, w1.end());
    const std::vector<int> v(w2.begin() + 1, w2.end());
    auto prepend = [&out](int head, const std::map<std::vector<int>, long>& sub) {
        for (const auto& [w, c] : sub) {
            std::vector<int> k;
            k.reserve(w.size() + 1);
            k.push_back(head);
            k.insert(k.end(), w.begin(), w.end());
            out[k] += c;
        }
    };
    prepend(w1[0], quasi_shuffle(u, w2));
    prepend(w2[0], quasi_shuffle(w1, v));
    prepend(w1[0] + w2[0], quasi_shuffle(u, v));
    return out;
}

long cutoff_or_default(long cutoff, int digits) {
    const long n = cutoff > 0 ? cutoff : default_cutoff(digits);
    if (n > max_direct_cutoff) {
        throw precision_error("direct-summation cutoff exceeds the configured maximum", 0);
    }
    return n;
}

// Cross-call memo of finished MZV values.
std::mutex g_mzv_mutex;
std::map<std::tuple<std::vector<int>, int, long>, HPReal> g_mzv_memo;

// Per-call evaluation context: holds the working budget, the cutoff, and the
// caches shared by the mutual recursion between word expansions and values.
struct Engine {
    int digits;
    int wd;
    long N;
    HPReal drop_thresh; // divergent pieces below this are treated as dust
    HPReal dust_thresh; // negligible tail coefficients, skipped for speed
    std::map<std::pair<std::vector<int>, int>, Expansion> word_cache;
    std::map<std::vector<int>, HPReal> values;

    Engine(int digits_, long cutoff)
        : digits(digits_),
          wd(working_digits(digits_)),
          N(cutoff_or_default(cutoff, digits_)),
          drop_thresh(pow10_neg(digits_ + 3, wd)),
          dust_thresh(pow10_neg(wd + 4, wd)) {}

    Expansion factor(int t, int bmax) const {
        return t == 1 ? harmonic_asymptotics(bmax, em_correction_order, wd)
                      : zn_asymptotics(t, bmax, em_correction_order, wd);
    }

    // sum_{n>N} t(n) for a term with asymptotic form `tail`.
    HPReal tail_sum(const Expansion& tail) const {
        HPReal total = HPReal::zero(wd);
        for (const auto& [key, c] : tail) {
            if (abs(c) < dust_thresh) continue;
            if (key.second < 2) {
                if (abs(c) < drop_thresh) continue;
                throw divergence_error(
                    "series tail contains a non-decaying term (inverse power < 2)");
            }
            total += c * em_tail_value(key.first, key.second, N, em_correction_order, wd);
        }
        return total;
    }

    // Asymptotic expansion of zeta_n(word) as n -> infinity.
    Expansion word_expansion(const std::vector<int>& word, int bmax) {
        const auto key = std::make_pair(word, bmax);
        if (auto it = word_cache.find(key); it != word_cache.end()) return it->second;

        Expansion r;
        if (word.empty()) {
            r[{0, 0}] = HPReal::one(wd);
        } else if (std::all_of(word.begin(), word.end(), [](int s) { return s == 1; })) {
            // zeta_n({1}_k) is the elementary symmetric function e_k of {1/j};
            // Newton's identity k e_k = sum_i (-1)^(i-1) e_(k-i) p_i with
            // power sums p_i = zeta_n(i).
            const int k = static_cast<int>(word.size());
            std::vector<Expansion> es(1);
            es[0][{0, 0}] = HPReal::one(wd);
            for (int kk = 1; kk <= k; ++kk) {
                Expansion acc;
                for (int i = 1; i <= kk; ++i) {
                    const Expansion t = expansion_mul(es[kk - i], factor(i, bmax), bmax);
                    expansion_add_scaled(acc, t, HPReal::from_long(i % 2 == 1 ? 1 : -1, wd));
                }
                Expansion ek;
                expansion_add_scaled(ek, acc, HPReal::from_rational(rat(1, kk), wd));
                es.push_back(std::move(ek));
            }
            r = es[static_cast<size_t>(k)];
        } else if (word[0] == 1) {
            // Leading ones are eliminated through the stuffle product: the
            // word occurs with coefficient 1 in {1}_j * u, every other word
            // in the product has fewer leading ones or shorter length.
            size_t j = 0;
            while (word[j] == 1) ++j;
            const std::vector<int> ones(word.begin(), word.begin() + static_cast<long>(j));
            const std::vector<int> u(word.begin() + static_cast<long>(j), word.end());
            r = expansion_mul(word_expansion(ones, bmax), word_expansion(u, bmax), bmax);
            for (const auto& [w, c] : quasi_shuffle(ones, u)) {
                if (w == word) continue;
                expansion_add_scaled(r, word_expansion(w, bmax), HPReal::from_long(-c, wd));
            }
        } else {
            // Convergent head: zeta_n(word) = zeta(word) - sum_{m>n} of the
            // term zeta_(m-1)(rest) m^-s1, completed symbolically.
            const int s1 = word[0];
            const std::vector<int> rest(word.begin() + 1, word.end());
            const Expansion term = expansion_shift_power(
                expansion_shift_back(word_expansion(rest, bmax), bmax), s1);
            r[{0, 0}] = value(word);
            for (const auto& [k2, c] : term) {
                if (abs(c) < dust_thresh) continue;
                for (const auto& [k3, cc] :
                     em_tail_symbolic(k2.first, k2.second, em_correction_order, bmax)) {
                    expansion_accumulate(r, k3.first, k3.second, -(c * cc));
                }
            }
        }
        return word_cache.emplace(key, std::move(r)).first->second;
    }

    // Numeric MZV for an admissible word.
    HPReal value(const std::vector<int>& word) {
        if (auto it = values.find(word); it != values.end()) return it->second;
        const auto global_key = std::make_tuple(word, digits, N);
        {
            std::lock_guard<std::mutex> lock(g_mzv_mutex);
            if (auto it = g_mzv_memo.find(global_key); it != g_mzv_memo.end()) {
                values.emplace(word, it->second);
                return it->second;
            }
        }
        const int s1 = word[0];
        const int bmax = s1 + tail_extra_powers;
        const Rational direct = mhn(N, Composition(word));
        const std::vector<int> rest(word.begin() + 1, word.end());
        const Expansion term = expansion_shift_power(
            expansion_shift_back(word_expansion(rest, bmax), bmax), s1);
        HPReal r = HPReal::from_rational(direct, wd) + tail_sum(term);
        values.emplace(word, r);
        {
            std::lock_guard<std::mutex> lock(g_mzv_mutex);
            g_mzv_memo.emplace(global_key, r);
        }
        return r;
    }
};

void check_mzv_envelope(const Composition& s) {
    if (!s.admissible()) {
        throw divergence_error("mzv requires an admissible composition (first part >= 2)");
    }
    if (s.depth() > max_mzv_depth || s.weight() > max_mzv_weight) {
        throw unsupported_error("composition outside the supported depth/weight envelope");
    }
}

} // namespace

namespace {
std::atomic<long> g_cutoff_override{0};
} // namespace

void set_cutoff_override(long n_max) {
    if (n_max < 0 || n_max > max_direct_cutoff)
        throw std::domain_error("cutoff override out of range");
    g_cutoff_override.store(n_max, std::memory_order_relaxed);
}

long cutoff_override() {
    return g_cutoff_override.load(std::memory_order_relaxed);
}

long default_cutoff(int digits) {
    const long o = g_cutoff_override.load(std::memory_order_relaxed);
    if (o > 0) return o;
    if (digits <= 20) return 256;
    if (digits <= 34) return 512;
    if (digits <= 44) return 1024;
    return 2048;
}

HPReal sum_series(const SeriesSpec& spec, int digits) {
    if (spec.decay.second < 2) {
        throw divergence_error("sum_series requires declared decay power >= 2");
    }
    if (!spec.term) throw std::invalid_argument("sum_series: missing term generator");
    Engine eng(digits, spec.cutoff);
    Rational direct(0);
    for (long n = 1; n <= eng.N; ++n) direct += spec.term(n);
    const HPReal r = HPReal::from_rational(direct, eng.wd) + eng.tail_sum(spec.tail);
    return with_digits(r, digits);
}

HPReal linear_sum(int p, int q, int digits, long cutoff) {
    if (p < 1) throw std::domain_error("linear_sum requires p >= 1");
    return euler_sum({p}, q, digits, cutoff);
}

HPReal euler_sum(const std::vector<int>& s, int q, int digits, long cutoff) {
    for (int si : s) {
        if (si < 1) throw std::domain_error("euler_sum requires every index >= 1");
    }
    if (q < 2) throw divergence_error("euler_sum requires q >= 2");
    Engine eng(digits, cutoff);
    const int bmax = q + tail_extra_powers;

    std::map<int, Rational> pref; // distinct index -> running zeta_n(index)
    for (int si : s) pref.emplace(si, Rational(0));
    Rational direct(0);
    for (long n = 1; n <= eng.N; ++n) {
        const auto un = static_cast<unsigned long>(n);
        for (auto& [t, v] : pref) v += inv_power(un, static_cast<unsigned long>(t));
        Rational p(1);
        for (int si : s) p *= pref.at(si);
        direct += p * inv_power(un, static_cast<unsigned long>(q));
    }

    Expansion e;
    e[{0, 0}] = HPReal::one(eng.wd);
    for (int si : s) e = expansion_mul(e, eng.factor(si, bmax), bmax);
    const HPReal r = HPReal::from_rational(direct, eng.wd) +
                     eng.tail_sum(expansion_shift_power(e, q));
    return with_digits(r, digits);
}

HPReal mzv(const Composition& s, int digits, long cutoff) {
    check_mzv_envelope(s);
    Engine eng(digits, cutoff);
    return with_digits(eng.value(s.parts), digits);
}

HPReal mzv_star(const Composition& s, int digits, long cutoff) {
    check_mzv_envelope(s);
    Engine eng(digits, cutoff);
    HPReal total = HPReal::zero(eng.wd);
    const int k = s.depth();
    // Sum over the 2^(k-1) contractions of adjacent parts.
    for (long mask = 0; mask < (1L << (k - 1)); ++mask) {
        std::vector<int> comp{s.parts[0]};
        for (int i = 1; i < k; ++i) {
            if (mask & (1L << (i - 1))) {
                comp.back() += s.parts[static_cast<size_t>(i)];
            } else {
                comp.push_back(s.parts[static_cast<size_t>(i)]);
            }
        }
        total += eng.value(comp);
    }
    return with_digits(total, digits);
}

namespace {

void check_asymptotics_word(const Composition& s) {
    for (int p : s.parts) {
        if (p < 1) throw std::domain_error("harmonic-word asymptotics require parts >= 1");
    }
    if (s.depth() > max_mzv_depth || s.weight() > max_mzv_weight) {
        throw unsupported_error("composition outside the supported depth/weight envelope");
    }
}

} // namespace

Expansion mhn_asymptotics(const Composition& s, int bmax, int digits) {
    check_asymptotics_word(s);
    Engine eng(digits, 0);
    return eng.word_expansion(s.parts, bmax);
}

Expansion mhn_star_asymptotics(const Composition& s, int bmax, int digits) {
    check_asymptotics_word(s);
    Engine eng(digits, 0);
    if (s.empty()) return eng.word_expansion({}, bmax);
    Expansion total;
    const int k = s.depth();
    // Sum over the 2^(k-1) contractions of adjacent parts.
    for (long mask = 0; mask < (1L << (k - 1)); ++mask) {
        std::vector<int> comp{s.parts[0]};
        for (int i = 1; i < k; ++i) {
            if (mask & (1L << (i - 1))) {
                comp.back() += s.parts[static_cast<size_t>(i)];
            } else {
                comp.push_back(s.parts[static_cast<size_t>(i)]);
            }
        }
        expansion_add_scaled(total, eng.word_expansion(comp, bmax), HPReal::one(eng.wd));
    }
    return total;
}

Expansion shifted_power_asymptotics(long a, int e, int bmax, int digits) {
    if (e < 1) throw std::domain_error("shifted_power_asymptotics requires e >= 1");
    const int wd = working_digits(digits);
    Expansion out;
    Rational ap(1); // (-a)^i
    for (int i = 0; e + i <= bmax; ++i) {
        out[{0, e + i}] = HPReal::from_rational(
            Rational(binomial(static_cast<unsigned long>(e + i - 1),
                              static_cast<unsigned long>(i))) *
                ap,
            wd);
        ap *= Rational(-a);
    }
    return out;
}

HPReal hurwitz_zeta(int t, const Rational& a, int digits) {
    if (t < 2) throw divergence_error("hurwitz_zeta requires exponent >= 2");
    if (sgn(a) < 0) throw std::domain_error("hurwitz_zeta requires shift >= 0");
    const int wd = working_digits(digits);
    const long N = std::max<long>(32, 2L * digits);

    // Exact direct block: (n+a)^-t = d^t / (n d + u)^t with a = u/d canonical.
    const Integer u = a.get_num();
    const Integer d = a.get_den();
    Integer dt;
    mpz_pow_ui(dt.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(t));
    Rational direct(0);
    for (long n = 1; n <= N; ++n) {
        const Integer base = d * n + u;
        Integer bt;
        mpz_pow_ui(bt.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(t));
        Rational term(dt, bt);
        term.canonicalize();
        direct += term;
    }

    // Euler-Maclaurin completion at x = N + a, with adaptive correction depth.
    const HPReal x = HPReal::from_rational(Rational(N) + a, wd);
    HPReal total = HPReal::from_rational(direct, wd);
    total += pow_si(x, -(t - 1)) / HPReal::from_long(t - 1, wd);
    total -= pow_si(x, -t) / HPReal::from_long(2, wd);
    const HPReal thresh = pow10_neg(digits + 8, wd);
    const Rational tq(t);
    HPReal smallest = HPReal::nan(wd);
    for (int j = 1; j <= 400; ++j) {
        const Rational coeff = bernoulli(2 * static_cast<unsigned long>(j)) *
                               rising(tq, 2 * static_cast<unsigned long>(j) - 1) /
                               Rational(factorial(2 * static_cast<unsigned long>(j)));
        const HPReal term = HPReal::from_rational(coeff, wd) * pow_si(x, -(t + 2 * j - 1));
        total += term;
        const HPReal mag = abs(term);
        if (mag < thresh) return with_digits(total, digits);
        if (j == 1 || mag < smallest) smallest = mag;
    }
    // Report the budget the smallest correction actually supports.
    int achieved = 0;
    for (int dd = digits; dd >= 1; --dd) {
        if (smallest < pow10_neg(dd + 8, wd)) {
            achieved = dd;
            break;
        }
    }
    throw precision_error("hurwitz_zeta corrections did not reach the digit budget",
                          achieved);
}

namespace {

// Shifted-argument engine; words with all parts >= 2 have log-free
// asymptotics, so expansions are plain power series in v = n + a.
struct HurwitzEngine {
    using PowSeries = std::map<int, HPReal>; // sum c_b v^-b

    int digits;
    int wd;
    long N;
    Rational a;
    Integer u, d;
    HPReal x; // N + a
    HPReal dust_thresh;
    std::map<std::pair<std::vector<int>, int>, PowSeries> word_cache;
    std::map<std::vector<int>, HPReal> values;
    std::map<int, HPReal> tail_cache; // b -> sum_{n>N} (n+a)^-b

    HurwitzEngine(int digits_, const Rational& a_, long cutoff)
        : digits(digits_),
          wd(working_digits(digits_)),
          N(cutoff_or_default(cutoff, digits_)),
          a(a_),
          u(a_.get_num()),
          d(a_.get_den()),
          x(HPReal::from_rational(Rational(N) + a_, wd)),
          dust_thresh(pow10_neg(wd + 4, wd)) {}

    Rational shifted_inv_power(long m, int w) const {
        Integer dt, bt;
        const Integer base = d * m + u;
        mpz_pow_ui(dt.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(w));
        mpz_pow_ui(bt.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(w));
        Rational r(dt, bt);
        r.canonicalize();
        return r;
    }

    // sum_{n>N} (n+a)^-b: the symbolic completion of m^-b evaluated at N+a
    // (derivatives of (n+a)^-b in n reproduce the same power pattern).
    HPReal tail_power(int b) {
        if (auto it = tail_cache.find(b); it != tail_cache.end()) return it->second;
        HPReal total = HPReal::zero(wd);
        for (const auto& [key, c] : em_tail_symbolic(0, b, em_correction_order, b + 2 * em_correction_order + 2)) {
            total += HPReal::from_rational(c, wd) * pow_si(x, -key.second);
        }
        return tail_cache.emplace(b, total).first->second;
    }

    // (v-1)^-b expanded in v, truncated at bmax.
    PowSeries shift_back(const PowSeries& e, int bmax) const {
        PowSeries out;
        for (const auto& [b, c] : e) {
            if (b == 0) {
                auto [it, inserted] = out.try_emplace(0, c);
                if (!inserted) it->second += c;
                continue;
            }
            for (int i = 0; b + i <= bmax; ++i) {
                const HPReal piece =
                    c * Rational(binomial(static_cast<unsigned long>(b + i - 1),
                                          static_cast<unsigned long>(i)));
                auto [it, inserted] = out.try_emplace(b + i, piece);
                if (!inserted) it->second += piece;
            }
        }
        return out;
    }

    PowSeries zn_series(int t, int bmax) {
        PowSeries e;
        e[0] = hurwitz_zeta(t, a, wd);
        for (const auto& [key, c] : em_tail_symbolic(0, t, em_correction_order, bmax)) {
            const HPReal piece = HPReal::from_rational(-c, wd);
            auto [it, inserted] = e.try_emplace(key.second, piece);
            if (!inserted) it->second += piece;
        }
        return e;
    }

    PowSeries word_series(const std::vector<int>& word, int bmax) {
        const auto key = std::make_pair(word, bmax);
        if (auto it = word_cache.find(key); it != word_cache.end()) return it->second;
        PowSeries r;
        if (word.empty()) {
            r[0] = HPReal::one(wd);
        } else {
            const int s1 = word[0];
            const std::vector<int> rest(word.begin() + 1, word.end());
            const PowSeries term = shift_back(word_series(rest, bmax), bmax - s1);
            r[0] = value(word);
            for (const auto& [b, c] : term) {
                if (abs(c) < dust_thresh) continue;
                for (const auto& [k3, cc] :
                     em_tail_symbolic(0, b + s1, em_correction_order, bmax)) {
                    const HPReal piece = -(c * cc);
                    auto [it, inserted] = r.try_emplace(k3.second, piece);
                    if (!inserted) it->second += piece;
                }
            }
        }
        return word_cache.emplace(key, std::move(r)).first->second;
    }

    HPReal value(const std::vector<int>& word) {
        if (auto it = values.find(word); it != values.end()) return it->second;
        const int s1 = word[0];
        const int bmax = s1 + tail_extra_powers;
        // Exact direct block: strict nested DP over shifted denominators.
        const size_t k = word.size();
        std::vector<Rational> state(k + 1, Rational(0));
        state[k] = 1;
        for (long m = 1; m <= N; ++m) {
            for (size_t j = 0; j < k; ++j) {
                // ascending j reads state[j+1] from step m-1 (strict sums)
                state[j] += state[j + 1] * shifted_inv_power(m, word[j]);
            }
        }
        const std::vector<int> rest(word.begin() + 1, word.end());
        const PowSeries term = shift_back(word_series(rest, bmax), bmax - s1);
        HPReal r = HPReal::from_rational(state[0], wd);
        for (const auto& [b, c] : term) {
            if (abs(c) < dust_thresh) continue;
            r += c * tail_power(b + s1);
        }
        values.emplace(word, r);
        return r;
    }
};

void check_hurwitz_word(const Composition& s, const Rational& a) {
    if (sgn(a) < 0) throw std::domain_error("shifted words require shift >= 0");
    if (s.empty()) throw std::domain_error("shifted words require a nonempty composition");
    for (int p : s.parts) {
        if (p < 2) {
            throw unsupported_error("shifted words are supported only with every part >= 2");
        }
    }
    if (s.depth() > max_mzv_depth || s.weight() > max_mzv_weight) {
        throw unsupported_error("composition outside the supported depth/weight envelope");
    }
}

} // namespace

HPReal hurwitz_mzv(const Composition& s, const Rational& a, int digits, long cutoff) {
    check_hurwitz_word(s, a);
    HurwitzEngine eng(digits, a, cutoff);
    return with_digits(eng.value(s.parts), digits);
}

HPReal hurwitz_mzv_star(const Composition& s, const Rational& a, int digits, long cutoff) {
    check_hurwitz_word(s, a);
    HurwitzEngine eng(digits, a, cutoff);
    HPReal total = HPReal::zero(eng.wd);
    const int k = s.depth();
    for (long mask = 0; mask < (1L << (k - 1)); ++mask) {
        std::vector<int> comp{s.parts[0]};
        for (int i = 1; i < k; ++i) {
            if (mask & (1L << (i - 1))) {
                comp.back() += s.parts[static_cast<size_t>(i)];
            } else {
                comp.push_back(s.parts[static_cast<size_t>(i)]);
            }
        }
        total += eng.value(comp);
    }
    return with_digits(total, digits);
}

NumericEnv::NumericEnv(int digits) : digits_(digits) {
    if (digits < 1) throw std::domain_error("NumericEnv requires a positive digit budget");
}

const HPReal& NumericEnv::atom_value(const Atom& at) {
    const std::string key = at.str();
    if (auto it = values_.find(key); it != values_.end()) return it->second;
    HPReal v = HPReal::nan(digits_);
    switch (at.kind) {
    case Atom::Kind::Z:
        v = riemann_zeta(at.a, digits_);
        break;
    case Atom::Kind::S:
        v = linear_sum(at.a, at.b, digits_);
        break;
    case Atom::Kind::M:
        v = mzv(at.comp, digits_);
        break;
    }
    return values_.emplace(key, std::move(v)).first->second;
}

void NumericEnv::seed(const std::string& atom_text, const HPReal& value) {
    values_.insert_or_assign(atom_text, value);
}

bool NumericEnv::has(const std::string& atom_text) const {
    return values_.find(atom_text) != values_.end();
}

HPReal NumericEnv::eval(const AlgebraElement& e) {
    HPReal total = HPReal::zero(digits_);
    for (const auto& [mono, coeff] : e.terms()) {
        HPReal m = HPReal::from_rational(coeff, digits_);
        for (const auto& [at, p] : mono.factors) {
            const HPReal v = atom_value(at);
            m *= (p == 1) ? v : pow_si(v, p);
        }
        total += m;
    }
    return total;
}

HPReal eval_algebra(const AlgebraElement& e, NumericEnv& env) { return env.eval(e); }

} // namespace zetasum
