#include "zetasum/reductions.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "zetasum/errors.hpp"
#include "zetasum/rational.hpp"
#include "zetasum/wtable.hpp"

namespace zetasum {

namespace {

Rational neg_one_pow(int e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

} // namespace

const std::map<std::string, AlgebraElement>& mzv_reduction_table() {
    static const std::map<std::string, AlgebraElement> table = [] {
        std::map<std::string, AlgebraElement> t;
        auto put = [&t](std::initializer_list<int> idx, const char* text) {
            t.emplace(format_composition(Composition(idx)), parse_algebra(text));
        };
        put({5, 1}, "3/4*z(6)-1/2*z(3)^2");
        put({6, 1}, "3*z(7)-z(2)*z(5)-z(3)*z(4)");
        put({6, 1, 1}, "61/24*z(8)-3*z(3)*z(5)+1/2*z(2)*z(3)^2");
        put({5, 1, 1, 1}, "499/192*z(8)-4*z(3)*z(5)+z(2)*z(3)^2");
        put({5, 1, 2}, "-73/72*z(8)+9/2*z(3)*z(5)-3/2*z(2)*z(3)^2-S(2,6)");
        // The S(2,6) coefficient here is 7/4: the entry is pinned by 50-digit
        // numeric evaluation, and the weight-8 consistency checks in the test
        // suite fail for any other value.
        put({5, 2, 1}, "-541/144*z(8)+7/2*z(3)*z(5)-z(2)*z(3)^2+7/4*S(2,6)");
        put({7, 1, 1}, "28/3*z(9)-3*z(2)*z(7)-7/4*z(3)*z(6)-9/4*z(4)*z(5)+1/6*z(3)^3");
        put({6, 1, 2}, "-313/36*z(9)+7*z(2)*z(7)-5/3*z(3)*z(6)-1/4*z(4)*z(5)-1/3*z(3)^3");
        put({6, 2, 1}, "-2189/72*z(9)+11*z(2)*z(7)+9/2*z(3)*z(6)+13/2*z(4)*z(5)-1/3*z(3)^3");
        return t;
    }();
    return table;
}

std::optional<AlgebraElement> known_mzv(const Composition& s) {
    if (s.empty()) return ael_const(Rational(1));
    if (!s.admissible()) return std::nullopt;
    if (s.depth() == 1) return ael_zeta(s.parts[0]);
    const bool hook = std::all_of(s.parts.begin() + 1, s.parts.end(),
                                  [](int p) { return p == 1; });
    if (hook) return hook_mzv(s.parts[0] - 2, s.depth());
    const bool power = std::all_of(s.parts.begin(), s.parts.end(),
                                   [&s](int p) { return p == s.parts[0]; });
    if (power) return power_zeta(s.parts[0], s.depth());
    const auto& table = mzv_reduction_table();
    if (auto it = table.find(format_composition(s)); it != table.end()) return it->second;
    return std::nullopt;
}

AlgebraElement reduce_known_mzvs(const AlgebraElement& e) {
    AlgebraElement out;
    for (const auto& [mono, coeff] : e.terms()) {
        AlgebraElement acc = ael_const(coeff);
        for (const auto& [at, p] : mono.factors) {
            AlgebraElement f = AlgebraElement::from_atom(at);
            if (at.kind == Atom::Kind::M) {
                if (auto r = known_mzv(at.comp)) f = *r;
            }
            for (int i = 0; i < p; ++i) acc *= f;
        }
        out += acc;
    }
    return out;
}

AlgebraElement star_hook(int p, int m) {
    if (p < 1 || m < 1) throw std::domain_error("star_hook requires p >= 1, m >= 1");

    AlgebraElement e;
    for (int i = 1; i <= p - 1; ++i) {
        // zeta(p+1-i) * zeta(m+1, {1}_(i-1))
        e += (ael_zeta(p + 1 - i) * hook_mzv(m - 1, i)) * neg_one_pow(i - 1);
    }

    // Interior words (m+1, {1}_(i-1), 2, {1}_(p-1-i)), i = 1..p-1.
    std::vector<Composition> words;
    for (int i = 1; i <= p - 1; ++i) {
        words.push_back(concat(hook_index(m + 1, i - 1),
                               concat(Composition{2}, ones(p - 1 - i))));
    }
    auto all_known = [](const std::vector<Composition>& ws) {
        return std::all_of(ws.begin(), ws.end(),
                           [](const Composition& w) { return known_mzv(w).has_value(); });
    };

    AlgebraElement middle;
    if (all_known(words)) {
        for (const auto& w : words) middle += *known_mzv(w);
    } else {
        // Index-swap rewrite of the whole interior sum:
        // sum_i zeta(m+1,{1}_(i-1),2,{1}_(p-1-i))
        //   = sum_i zeta(p+1,{1}_(i-1),2,{1}_(m-1-i))
        //     + zeta(p+2,{1}_(m-1)) - zeta(m+2,{1}_(p-1))
        std::vector<Composition> swapped;
        for (int i = 1; i <= m - 1; ++i) {
            swapped.push_back(concat(hook_index(p + 1, i - 1),
                                     concat(Composition{2}, ones(m - 1 - i))));
        }
        if (all_known(swapped)) {
            for (const auto& w : swapped) middle += *known_mzv(w);
            middle += hook_mzv(p, m) - hook_mzv(m, p);
        } else {
            for (const auto& w : words) {
                if (auto r = known_mzv(w)) {
                    middle += *r;
                } else {
                    middle += ael_mzv(w);
                }
            }
        }
    }
    const Rational sgn = neg_one_pow(p + 1);
    e += middle * sgn;
    e += hook_mzv(m, p) * (sgn * Rational(m + 1));
    return e;
}

AlgebraElement power_zeta(int p, int m) {
    if (p < 2) throw divergence_error("power_zeta requires p >= 2");
    if (m < 0) throw std::domain_error("power_zeta requires m >= 0");
    std::vector<AlgebraElement> vals{ael_const(Rational(1))};
    for (int mm = 1; mm <= m; ++mm) {
        AlgebraElement acc;
        for (int i = 0; i <= mm - 1; ++i) {
            acc += (vals[static_cast<size_t>(i)] * ael_zeta(p * (mm - i))) * neg_one_pow(i);
        }
        vals.push_back(acc * (neg_one_pow(mm - 1) * rat(1, mm)));
    }
    return vals[static_cast<size_t>(m)];
}

AlgebraElement power_zeta_star(int p, int m) {
    if (p < 2) throw divergence_error("power_zeta_star requires p >= 2");
    if (m < 0) throw std::domain_error("power_zeta_star requires m >= 0");
    std::vector<AlgebraElement> vals{ael_const(Rational(1))};
    for (int mm = 1; mm <= m; ++mm) {
        AlgebraElement acc;
        for (int i = 0; i <= mm - 1; ++i) {
            acc += vals[static_cast<size_t>(i)] * ael_zeta(p * (mm - i));
        }
        vals.push_back(acc * rat(1, mm));
    }
    return vals[static_cast<size_t>(m)];
}

AlgebraElement h_sum(int m, int p) {
    if (m < 1) throw std::domain_error("h_sum requires m >= 1");
    if (p < 2) throw divergence_error("h_sum requires p >= 2");
    std::vector<AlgebraElement> H{AlgebraElement{}}; // index 0 unused
    for (int mm = 1; mm <= m; ++mm) {
        AlgebraElement e = ael_zeta(p * mm + 1) * neg_one_pow(mm - 1);
        AlgebraElement acc;
        for (int i = 1; i <= mm - 1; ++i) {
            acc += (H[static_cast<size_t>(i)] * ael_zeta(p * (mm - i)) +
                    (power_zeta(p, i) * ael_zeta(p * (mm - i) + 1)) * Rational(mm - i)) *
                   neg_one_pow(i);
        }
        e += acc * (neg_one_pow(mm - 1) * rat(1, mm));
        H.push_back(e);
    }
    return H[static_cast<size_t>(m)];
}

AlgebraElement h_star_sum(int m, int p) {
    if (m < 1) throw std::domain_error("h_star_sum requires m >= 1");
    if (p < 2) throw divergence_error("h_star_sum requires p >= 2");
    std::vector<AlgebraElement> H{AlgebraElement{}}; // index 0 unused
    for (int mm = 1; mm <= m; ++mm) {
        AlgebraElement e = ael_zeta(p * mm + 1);
        AlgebraElement acc;
        for (int i = 1; i <= mm - 1; ++i) {
            acc += H[static_cast<size_t>(i)] * ael_zeta(p * (mm - i)) +
                   (power_zeta_star(p, i) * ael_zeta(p * (mm - i) + 1)) * Rational(mm - i);
        }
        e += acc * rat(1, mm);
        H.push_back(e);
    }
    return H[static_cast<size_t>(m)];
}

} // namespace zetasum
