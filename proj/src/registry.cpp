#include "zetasum/registry.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "zetasum/algebra.hpp"
#include "zetasum/combinatorics.hpp"
#include "zetasum/composition.hpp"
#include "zetasum/constants.hpp"
#include "zetasum/errors.hpp"
#include "zetasum/expansion.hpp"
#include "zetasum/hpreal.hpp"
#include "zetasum/integrals.hpp"
#include "zetasum/numeric.hpp"
#include "zetasum/rational.hpp"
#include "zetasum/reductions.hpp"
#include "zetasum/wtable.hpp"

namespace zetasum {

namespace {

using ParamMap = std::map<std::string, int>;

Rational neg_one_pow(int e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

Rational fact(int n) { return Rational(factorial(static_cast<unsigned long>(n))); }

unsigned long ul(long v) { return static_cast<unsigned long>(v); }

HPReal hp_from_double(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return HPReal::from_string(buf, digits);
}

// Elementary-symmetric prefix chain: after feeding 1..t via advance(), e[i]
// equals the strict one-word harmonic number zeta_t({1}_i).
struct StrictChain {
    std::vector<Rational> e;
    explicit StrictChain(int imax)
        : e(static_cast<size_t>(imax) + 1, Rational(0)) {
        e[0] = 1;
    }
    void advance(long t) {
        for (size_t i = e.size() - 1; i >= 1; --i) e[i] += e[i - 1] / t;
    }
};

// Weak analogue: after feeding 1..t, f[i] equals zeta*_t({1}_i).
struct WeakChain {
    std::vector<Rational> f;
    explicit WeakChain(int imax)
        : f(static_cast<size_t>(imax) + 1, Rational(0)) {
        f[0] = 1;
    }
    void advance(long t) {
        for (size_t i = 1; i < f.size(); ++i) f[i] += f[i - 1] / t;
    }
};

// (head, {1}_a, 2, {1}_b)
Composition interior_two(int head, int a, int b) {
    return concat(hook_index(head, a), concat(Composition{2}, ones(b)));
}

std::vector<int> repeat(int p, int m) {
    return std::vector<int>(static_cast<size_t>(m), p);
}

void admissible_rec(int w, int d, bool first, std::vector<int>& acc,
                    std::vector<Composition>& out) {
    if (d == 0) {
        if (w == 0) out.push_back(Composition(acc));
        return;
    }
    for (int f = first ? 2 : 1; f <= w - (d - 1); ++f) {
        acc.push_back(f);
        admissible_rec(w - f, d - 1, false, acc, out);
        acc.pop_back();
    }
}

// All compositions of w into d parts with first part >= 2 and the rest >= 1.
std::vector<Composition> admissible_words(int w, int d) {
    std::vector<Composition> out;
    std::vector<int> acc;
    if (d >= 1 && w >= d + 1) admissible_rec(w, d, true, acc, out);
    return out;
}

void bounded_rec(int m, int cap, std::vector<int>& acc,
                 std::vector<std::vector<int>>& out) {
    if (m == 0) {
        out.push_back(acc);
        return;
    }
    for (int v = 0; v <= cap; ++v) {
        acc.push_back(v);
        bounded_rec(m - 1, cap - v, acc, out);
        acc.pop_back();
    }
}

// All vectors (i_1..i_m) with entries >= 0 and sum <= cap.
std::vector<std::vector<int>> bounded_vectors(int m, int cap) {
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    bounded_rec(m, cap, acc, out);
    return out;
}

CheckOutcome numeric_outcome(const HPReal& lhs, const HPReal& rhs, double tol,
                             int digits) {
    CheckOutcome o;
    const HPReal d = abs(lhs - rhs);
    o.pass = d < hp_from_double(tol, 20);
    o.lhs = lhs.str(digits);
    o.rhs = rhs.str(digits);
    o.diff = d.str(3);
    return o;
}

// Numeric sweep: tracks the worst |lhs-rhs| and the first failing instance.
struct NumericSweep {
    HPReal tol_v;
    long checked = 0;
    long failed = 0;
    HPReal worst;
    std::string worst_label;
    HPReal worst_lhs, worst_rhs;
    std::string first_fail;

    explicit NumericSweep(double tol) : tol_v(hp_from_double(tol, 20)) {}

    void add(const std::string& label, const HPReal& lhs, const HPReal& rhs) {
        const HPReal d = abs(lhs - rhs);
        if (checked == 0 || d > worst) {
            worst = d;
            worst_label = label;
            worst_lhs = lhs;
            worst_rhs = rhs;
        }
        ++checked;
        if (!(d < tol_v)) {
            ++failed;
            if (first_fail.empty()) first_fail = label;
        }
    }

    CheckOutcome outcome(int digits) const {
        CheckOutcome o;
        o.pass = failed == 0 && checked > 0;
        o.lhs = worst_lhs.str(digits);
        o.rhs = worst_rhs.str(digits);
        o.diff = worst.str(3);
        std::ostringstream os;
        os << checked << " instance" << (checked == 1 ? "" : "s")
           << "; worst |lhs-rhs| at " << worst_label;
        if (failed > 0)
            os << "; " << failed << " failed, first at " << first_fail;
        o.note = os.str();
        return o;
    }
};

// Exact sweep: shows the first failing instance, else the last one checked.
struct ExactSweep {
    long checked = 0;
    long failed = 0;
    std::string show_label, show_lhs, show_rhs;

    void add(const std::string& label, const std::string& lhs,
             const std::string& rhs, bool ok) {
        ++checked;
        if (failed == 0) {
            show_label = label;
            show_lhs = lhs;
            show_rhs = rhs;
        }
        if (!ok) ++failed;
    }

    CheckOutcome outcome() const {
        CheckOutcome o;
        o.pass = failed == 0 && checked > 0;
        o.lhs = show_lhs;
        o.rhs = show_rhs;
        o.diff = o.pass ? "exact" : "mismatch";
        std::ostringstream os;
        os << checked << " instance" << (checked == 1 ? "" : "s");
        if (o.pass)
            os << ", all exact; shown: " << show_label;
        else
            os << "; " << failed << " mismatched, first at " << show_label;
        o.note = os.str();
        return o;
    }
};

// sum_n zeta_(n-1)({1}_(a-1)) / n^(b+1), the Stirling-ratio series
// sum_n s(n,a)/(n! n^b); requires a >= 1, b >= 1.
HPReal stirling_series_sum(int a, int b, int digits) {
    SeriesSpec spec;
    spec.term = [ch = StrictChain(a - 1), a, b](long n) mutable -> Rational {
        if (n > 1) ch.advance(n - 1);
        return ch.e[static_cast<size_t>(a - 1)] * inv_power(ul(n), ul(b + 1));
    };
    const int bmax = b + 1 + tail_extra_powers;
    spec.decay = {a - 1, b + 1};
    spec.tail = expansion_shift_power(
        expansion_shift_back(mhn_asymptotics(ones(a - 1), bmax, digits), bmax),
        b + 1);
    return sum_series(spec, digits);
}

// sum_n H_n zeta_(n-1)({1}_(a-1)) / n^(b+1); requires a >= 1, b >= 1.
HPReal h_stirling_series(int a, int b, int digits) {
    SeriesSpec spec;
    spec.term = [ch = StrictChain(a - 1), h = Rational(0), a,
                 b](long n) mutable -> Rational {
        if (n > 1) ch.advance(n - 1);
        h += Rational(1) / n;
        return h * ch.e[static_cast<size_t>(a - 1)] * inv_power(ul(n), ul(b + 1));
    };
    const int bmax = b + 1 + tail_extra_powers;
    spec.decay = {a, b + 1};
    spec.tail = expansion_mul(
        harmonic_asymptotics(bmax, em_correction_order, digits),
        expansion_shift_power(
            expansion_shift_back(mhn_asymptotics(ones(a - 1), bmax, digits),
                                 bmax),
            b + 1),
        bmax);
    return sum_series(spec, digits);
}

// sum_n zeta_(n-1)({1}_(a-1)) zeta_n(r) / n^(b+1); r >= 2, b >= 1.
HPReal z_stirling_series(int a, int r, int b, int digits) {
    SeriesSpec spec;
    spec.term = [ch = StrictChain(a - 1), z = Rational(0), a, r,
                 b](long n) mutable -> Rational {
        if (n > 1) ch.advance(n - 1);
        z += inv_power(ul(n), ul(r));
        return z * ch.e[static_cast<size_t>(a - 1)] * inv_power(ul(n), ul(b + 1));
    };
    const int bmax = b + 1 + tail_extra_powers;
    spec.decay = {a - 1, b + 1};
    spec.tail = expansion_mul(
        zn_asymptotics(r, bmax, em_correction_order, digits),
        expansion_shift_power(
            expansion_shift_back(mhn_asymptotics(ones(a - 1), bmax, digits),
                                 bmax),
            b + 1),
        bmax);
    return sum_series(spec, digits);
}

// sum_n k! zeta*_n({1}_k) zeta_(n-1)({1}_(p-1)) / n^(m+2), the Bell-weighted
// Stirling series sum_n Y_k(n) s(n,p)/(n! n^(m+1)); p >= 1, k >= 0, m >= 0.
HPReal y_stirling_series(int k, int p, int m, int digits) {
    const Rational kf = fact(k);
    SeriesSpec spec;
    spec.term = [wc = WeakChain(k), sc = StrictChain(p - 1), kf, k, p,
                 m](long n) mutable -> Rational {
        if (n > 1) sc.advance(n - 1);
        wc.advance(n);
        return kf * wc.f[static_cast<size_t>(k)] *
               sc.e[static_cast<size_t>(p - 1)] * inv_power(ul(n), ul(m + 2));
    };
    const int bmax = m + 2 + tail_extra_powers;
    spec.decay = {k + p - 1, m + 2};
    const Expansion prod = expansion_mul(
        mhn_star_asymptotics(ones(k), bmax, digits),
        expansion_shift_back(mhn_asymptotics(ones(p - 1), bmax, digits), bmax),
        bmax);
    Expansion tail;
    expansion_add_scaled(tail, expansion_shift_power(prod, m + 2),
                         HPReal::from_rational(kf, digits + 10));
    spec.tail = tail;
    return sum_series(spec, digits);
}

struct EulerRow {
    const char* label;
    std::vector<int> s;
    int q;
    const char* form;
};

// Stored closed forms for nonlinear Euler sums S_{s,q} = sum_n
// prod_i zeta_n(s_i) / n^q, with S(2,6) and S(2,8) kept as atoms.
const std::vector<EulerRow>& euler_rows() {
    static const std::vector<EulerRow> rows = {
        {"S_{1^22,2}", {1, 1, 2}, 2, "41/12*z(6)+2*z(3)^2"},
        {"S_{1^22,3}", {1, 1, 2}, 3, "-7*z(7)+19/2*z(3)*z(4)-2*z(2)*z(5)"},
        {"S_{1^32,2}", {1, 1, 1, 2}, 2,
         "83/16*z(7)+27/2*z(3)*z(4)-5/2*z(2)*z(5)"},
        {"S_{1^23,2}", {1, 1, 3}, 2, "329/16*z(7)-6*z(3)*z(4)-9/2*z(2)*z(5)"},
        {"S_{12^2,2}", {1, 2, 2}, 2, "-217/16*z(7)+5*z(3)*z(4)+13/2*z(2)*z(5)"},
        {"S_{1^24,2}", {1, 1, 4}, 2, "1289/96*z(8)-11*z(3)*z(5)+5*S(2,6)"},
        {"S_{1^23,3}", {1, 1, 3}, 3,
         "-443/288*z(8)+9/2*z(3)*z(5)+3/2*z(2)*z(3)^2-23/4*S(2,6)"},
        {"S_{1^22^2,2}", {1, 1, 2, 2}, 2,
         "55/8*z(8)-7*z(3)*z(5)+2*z(2)*z(3)^2+6*S(2,6)"},
        {"S_{3^2,2}", {3, 3}, 2,
         "677/24*z(8)-35*z(3)*z(5)+4*z(2)*z(3)^2+15/2*S(2,6)"},
        {"S_{23,3}", {2, 3}, 3,
         "-827/48*z(8)+45/2*z(3)*z(5)-3/2*z(2)*z(3)^2-23/4*S(2,6)"},
        {"S_{24,2}", {2, 4}, 2,
         "-403/36*z(8)+20*z(3)*z(5)-3*z(2)*z(3)^2-9/2*S(2,6)"},
        {"S_{1^5,3}", {1, 1, 1, 1, 1}, 3,
         "60499/288*z(8)-393/2*z(3)*z(5)-15/2*z(2)*z(3)^2+235/4*S(2,6)"},
        {"S_{1^6,2}", {1, 1, 1, 1, 1, 1}, 2,
         "27903/24*z(8)+31*z(3)*z(5)+16*z(2)*z(3)^2+57*S(2,6)"},
        {"S_{1^32,3}", {1, 1, 1, 2}, 3,
         "-2159/48*z(8)+93/2*z(3)*z(5)+3/2*z(2)*z(3)^2-53/4*S(2,6)"},
        {"S_{12^2,3}", {1, 2, 2}, 3,
         "-6313/288*z(8)+43/2*z(3)*z(5)+1/2*z(2)*z(3)^2-17/4*S(2,6)"},
        {"S_{1^42,2}", {1, 1, 1, 1, 2}, 2,
         "-6631/288*z(8)+90*z(3)*z(5)+3*z(2)*z(3)^2-47/2*S(2,6)"},
        {"S_{123,2}", {1, 2, 3}, 2,
         "-181/288*z(8)+15/2*z(3)*z(5)-3/2*z(2)*z(3)^2-7/4*S(2,6)"},
        {"S_{1^33,2}", {1, 1, 1, 3}, 2,
         "809/48*z(8)+23/2*z(3)*z(5)-7/2*z(2)*z(3)^2-33/4*S(2,6)"},
        {"S_{1^5,4}", {1, 1, 1, 1, 1}, 4,
         "4721/36*z(9)+265/8*z(2)*z(7)-4895/24*z(3)*z(6)+66*z(4)*z(5)-5*z(3)^3"},
        {"S_{1^23,4}", {1, 1, 3}, 4,
         "3895/72*z(9)-5/8*z(2)*z(7)-227/24*z(3)*z(6)-75/2*z(4)*z(5)+z(3)^3"},
        {"S_{1^32,4}", {1, 1, 1, 2}, 4,
         "-449/36*z(9)-7*z(2)*z(7)+11/8*z(3)*z(6)+27*z(4)*z(5)-11/3*z(3)^3"},
        {"S_{12^2,4}", {1, 2, 2}, 4,
         "-775/36*z(9)+85/8*z(2)*z(7)-221/24*z(3)*z(6)+10*z(4)*z(5)+3*z(3)^3"},
        {"S_{1^22,5}", {1, 1, 2}, 5,
         "-1481/72*z(9)-3*z(3)^3-5*z(2)*z(7)+295/24*z(3)*z(6)+18*z(4)*z(5)"},
        {"S_{13^2,3}", {1, 3, 3}, 3,
         "883/20*z(10)-26*z(5)^2-31/4*z(3)*z(7)-8*z(2)*z(3)*z(5)"
         "+3/4*z(3)^2*z(4)+9*z(2)*S(2,6)-21/4*S(2,8)"},
        {"S_{13,4}", {1, 3}, 4,
         "-511/144*z(8)+7*z(3)*z(5)+z(2)*z(3)^2-25/4*S(2,6)"},
        {"S_{2^2,4}", {2, 2}, 4,
         "11*S(2,6)+457/18*z(8)+6*z(2)*z(3)^2-40*z(3)*z(5)"},
        {"S_{1^4,4}", {1, 1, 1, 1}, 4,
         "13559/144*z(8)-92*z(3)*z(5)-2*z(2)*z(3)^2+26*S(2,6)"},
        {"S_{1^22,4}", {1, 1, 2}, 4,
         "193/96*z(8)+2*z(3)*z(5)-2*z(2)*z(3)^2+3/2*S(2,6)"},
    };
    return rows;
}

struct WRow {
    int m, k;
    const char* form;
};

// Closed forms of W(m,k) = int_0^1 ln^k(1-x) ln^m(x)/(1-x) dx.
const std::array<WRow, 15>& w_rows() {
    static const std::array<WRow, 15> rows = {{
        {2, 1, "-1/2*z(4)"},
        {3, 1, "12*z(5)-6*z(2)*z(3)"},
        {4, 1, "12*z(3)^2-18*z(6)"},
        {5, 1, "360*z(7)-120*z(3)*z(4)-120*z(2)*z(5)"},
        {4, 2, "240*z(7)-60*z(3)*z(4)-96*z(2)*z(5)"},
        {3, 3, "180*z(7)-45*z(3)*z(4)-72*z(2)*z(5)"},
        {4, 3, "-1497/4*z(8)+576*z(3)*z(5)-144*z(2)*z(3)^2"},
        {3, 4, "-366*z(8)+432*z(3)*z(5)-72*z(2)*z(3)^2"},
        {5, 2, "-610*z(8)+720*z(3)*z(5)-120*z(2)*z(3)^2"},
        {6, 2,
         "13440*z(9)+240*z(3)^3-4320*z(2)*z(7)-2520*z(3)*z(6)-3240*z(4)*z(5)"},
        {4, 4,
         "8064*z(9)+288*z(3)^3-2880*z(2)*z(7)-1260*z(3)*z(6)-2016*z(4)*z(5)"},
        {3, 5,
         "6720*z(9)+120*z(3)^3-2160*z(2)*z(7)-1260*z(3)*z(6)-1620*z(4)*z(5)"},
        {5, 3,
         "10080*z(9)+360*z(3)^3-3600*z(2)*z(7)-1575*z(3)*z(6)-2520*z(4)*z(5)"},
        {5, 4,
         "-84483/4*z(10)-11520*z(2)*z(3)*z(5)+28800*z(3)*z(7)"
         "-3600*z(4)*z(3)^2+14400*z(5)^2"},
        {4, 5,
         "-17514*z(10)-8640*z(2)*z(3)*z(5)+23040*z(3)*z(7)"
         "-3240*z(4)*z(3)^2+11520*z(5)^2"},
    }};
    return rows;
}

struct TableRow {
    const char* label;
    std::vector<int> s;
    int q;
    const char* form;
    const char* col2; // 30-digit value of the closed form, as published
    const char* col3; // 30-digit direct approximation, as published
};

// The published 16-row table of weight-8/9 Euler sums. The label determines
// (s, q); the closed form is the one whose value the row prints.
const std::vector<TableRow>& table_rows() {
    static const std::vector<TableRow> rows = {
        {"S_{1^4,4}", {1, 1, 1, 1}, 4,
         "13559/144*z(8)-92*z(3)*z(5)-2*z(2)*z(3)^2+26*S(2,6)",
         "1.68625748775730579166360832694",
         "1.68625748775730579166360833402"},
        {"S_{1^22,4}", {1, 1, 2}, 4,
         "193/96*z(8)+2*z(3)*z(5)-2*z(2)*z(3)^2+3/2*S(2,6)",
         "1.29068714089613697618140723840",
         "1.29068714089613697618140723441"},
        {"S_{1^32,3}", {1, 1, 1, 2}, 3,
         "-2159/48*z(8)+93/2*z(3)*z(5)+3/2*z(2)*z(3)^2-53/4*S(2,6)",
         "2.82229596096025461026149662829",
         "2.82229596096025461026149661993"},
        {"S_{1^23,3}", {1, 1, 3}, 3,
         "-443/288*z(8)+9/2*z(3)*z(5)+3/2*z(2)*z(3)^2-23/4*S(2,6)",
         "1.75388174691782356380634371202",
         "1.75388174691782356380634370478"},
        {"S_{12^2,3}", {1, 2, 2}, 3,
         "-6313/288*z(8)+43/2*z(3)*z(5)+1/2*z(2)*z(3)^2-17/4*S(2,6)",
         "1.63443098048025390280783629910",
         "1.63443098048025390280783629225"},
        {"S_{1^24,2}", {1, 1, 4}, 2,
         "1289/96*z(8)-11*z(3)*z(5)+5*S(2,6)",
         "4.88040799023015427295866390307",
         "4.88040799023015427295866390372"},
        {"S_{2^2,4}", {2, 2}, 4,
         "11*S(2,6)+457/18*z(8)+6*z(2)*z(3)^2-40*z(3)*z(5)",
         "1.13642391274089928376327915373",
         "1.13642391274089928376327915559"},
        {"S_{1^5,3}", {1, 1, 1, 1, 1}, 3,
         "60499/288*z(8)-393/2*z(3)*z(5)-15/2*z(2)*z(3)^2+235/4*S(2,6)",
         "8.20602621468401623725850548850",
         "8.20602621468401623725850551862"},
        {"S_{123,2}", {1, 2, 3}, 2,
         "-181/288*z(8)+15/2*z(3)*z(5)-3/2*z(2)*z(3)^2-7/4*S(2,6)",
         "3.36374308381687640081618084070",
         "3.36374308381687640081618083742"},
        {"S_{1^42,2}", {1, 1, 1, 1, 2}, 2,
         "-6631/288*z(8)+90*z(3)*z(5)+3*z(2)*z(3)^2-47/2*S(2,6)",
         "72.1778863641121208246730431963",
         "72.1778863641121208246730431899"},
        {"S_{1^33,2}", {1, 1, 1, 3}, 2,
         "809/48*z(8)+23/2*z(3)*z(5)-7/2*z(2)*z(3)^2-33/4*S(2,6)",
         "14.5074537674864815323431145949",
         "14.5074537674864815323431145933"},
        {"S_{1^6,2}", {1, 1, 1, 1, 1, 1}, 2,
         "27903/24*z(8)+31*z(3)*z(5)+16*z(2)*z(3)^2+57*S(2,6)",
         "1302.28271941001924714647587730",
         "1302.28271941001924714647587732"},
        {"S_{1^5,4}", {1, 1, 1, 1, 1}, 4,
         "4721/36*z(9)+265/8*z(2)*z(7)-4895/24*z(3)*z(6)+66*z(4)*z(5)-5*z(3)^3",
         "2.31083536190405961638953653685",
         "2.31083536190405961638953653376"},
        {"S_{1^23,4}", {1, 1, 3}, 4,
         "3895/72*z(9)-5/8*z(2)*z(7)-227/24*z(3)*z(6)-75/2*z(4)*z(5)+z(3)^3",
         "1.25355563158689137948838467515",
         "1.25355563158689137948838467072"},
        {"S_{12^2,4}", {1, 2, 2}, 4,
         "-775/36*z(9)+85/8*z(2)*z(7)-221/24*z(3)*z(6)+10*z(4)*z(5)+3*z(3)^3",
         "1.22503753401105341474879224535",
         "1.22503753401105341474879224098"},
        {"S_{1^32,4}", {1, 1, 1, 2}, 4,
         "-449/36*z(9)-7*z(2)*z(7)+11/8*z(3)*z(6)+27*z(4)*z(5)-11/3*z(3)^3",
         "1.50676526085085659032600904678",
         "1.50676526085085659032600904154"},
    };
    return rows;
}

std::vector<IdentityEntry> build_registry() {
    std::vector<IdentityEntry> reg;

    reg.push_back(
        {"r01", "fixed weight/depth zeta values sum to zeta(weight)",
         CheckMode::numeric,
         {{"n", 3, 10, 4}, {"k", 1, 4, 2}},
         0,
         0.0,
         [](const ParamMap& pm, int digits, double tol) {
             const int n = pm.at("n");
             const int k = pm.at("k");
             if (k > n - 1)
                 throw std::invalid_argument("r01 requires k <= n-1");
             const auto words = admissible_words(n, k);
             HPReal lhs = HPReal::zero(digits);
             for (const auto& w : words) lhs += mzv(w, digits);
             CheckOutcome o =
                 numeric_outcome(lhs, riemann_zeta(n, digits), tol, digits);
             o.note = std::to_string(words.size()) + " words summed";
             return o;
         }});

    reg.push_back(
        {"r02", "zeta values are invariant under duality",
         CheckMode::numeric,
         {{"w", 2, 10, 10}, {"d", 1, 4, 4}},
         0,
         0.0,
         [](const ParamMap& pm, int digits, double tol) {
             const int wmax = pm.at("w");
             const int dmax = pm.at("d");
             NumericSweep sw(tol);
             long skipped = 0;
             for (int w = 2; w <= wmax; ++w) {
                 for (int d = 1; d <= std::min(dmax, w - 1); ++d) {
                     for (const auto& s : admissible_words(w, d)) {
                         const Composition du = duality(s);
                         if (du.depth() > max_mzv_depth) {
                             ++skipped;
                             continue;
                         }
                         sw.add(format_composition(s), mzv(s, digits),
                                mzv(du, digits));
                     }
                 }
             }
             CheckOutcome o = sw.outcome(digits);
             if (skipped > 0) {
                 o.note += "; skipped " + std::to_string(skipped) +
                           " words whose dual exceeds depth " +
                           std::to_string(max_mzv_depth);
             }
             return o;
         }});

    reg.push_back(
        {"r03", "hook duality zeta(k+1,{1}_(m-1)) = zeta(m+1,{1}_(k-1)), exact",
         CheckMode::exact_symbolic,
         {{"m", 1, 6, 5}, {"k", 1, 6, 5}},
         0,
         0.0,
         [](const ParamMap& pm, int, double) {
             const int mb = pm.at("m");
             const int kb = pm.at("k");
             ExactSweep sw;
             for (int m = 1; m <= mb; ++m) {
                 for (int k = 1; k <= kb; ++k) {
                     const AlgebraElement a = hook_mzv(k - 1, m);
                     const AlgebraElement b = hook_mzv(m - 1, k);
                     sw.add("m=" + std::to_string(m) + ",k=" + std::to_string(k),
                            format_algebra(a), format_algebra(b), a == b);
                 }
             }
             return sw.outcome();
         }});

    reg.push_back(
        {"r04", "Stirling cycle numbers equal (n-1)! times strict one-words",
         CheckMode::exact_rational,
         {{"n", 1, 64, 12}, {"k", 1, 8, 6}},
         0,
         0.0,
         [](const ParamMap& pm, int, double) {
             const long nb = pm.at("n");
             const long kb = pm.at("k");
             ExactSweep sw;
             for (long n = 1; n <= nb; ++n) {
                 for (long k = 1; k <= std::min(kb, n); ++k) {
                     const Rational lhs(stirling1(ul(n), ul(k)));
                     const Rational rhs = Rational(factorial(ul(n - 1))) *
                                          mhn(n - 1, ones(static_cast<int>(k) - 1));
                     sw.add("n=" + std::to_string(n) + ",k=" + std::to_string(k),
                            rational_to_string(lhs), rational_to_string(rhs),
                            lhs == rhs);
                 }
             }
             return sw.outcome();
         }});

    reg.push_back(
        {"r05", "weak one-words equal complete Bell values over m!",
         CheckMode::exact_rational,
         {{"n", 1, 64, 30}, {"m", 0, 8, 6}},
         0,
         0.0,
         [](const ParamMap& pm, int, double) {
             const long nb = pm.at("n");
             const int mb = pm.at("m");
             ExactSweep sw;
             for (long n = 1; n <= nb; ++n) {
                 for (int m = 0; m <= mb; ++m) {
                     const Rational lhs = mhn_star(n, ones(m));
                     const Rational rhs = bell_Y(m, n) / fact(m);
                     sw.add("n=" + std::to_string(n) + ",m=" + std::to_string(m),
                            rational_to_string(lhs), rational_to_string(rhs),
                            lhs == rhs);
                 }
             }
             return sw.outcome();
         }});

    reg.push_back(
        {"r06", "interior-two weak words collapse to harmonic products",
         CheckMode::exact_rational,
         {{"n", 1, 64, 20}, {"m", 1, 8, 5}},
         0,
         0.0,
         [](const ParamMap& pm, int, double) {
             const long nb = pm.at("n");
             const int mb = pm.at("m");
             ExactSweep sw;
             for (long n = 1; n <= nb; ++n) {
                 for (int m = 1; m <= mb; ++m) {
                     Rational lhs(0), rhs(0);
                     for (int i = 1; i <= m; ++i) {
                         lhs += mhn_star(
                             n, concat(ones(i - 1),
                                       concat(Composition{2}, ones(m - i))));
                         rhs += harmonic(n, m + 2 - i) * mhn_star(n, ones(i - 1));
                     }
                     sw.add("n=" + std::to_string(n) + ",m=" + std::to_string(m),
                            rational_to_string(lhs), rational_to_string(rhs),
                            lhs == rhs);
                 }
             }
             return sw.outcome();
         }});

    reg.push_back(
        {"r07", "Stirling-ratio series equals its hook zeta value",
         CheckMode::numeric,
         {{"k", 1, 5, 2}, {"m", 1, 5, 2}},
         0,
         0.0,
         [](const ParamMap& pm, int digits, double tol) {
             const int k = pm.at("k");
             const int m = pm.at("m");
             const HPReal lhs = stirling_series_sum(k, m, digits);
             const HPReal rhs = mzv(hook_index(m + 1, k - 1), digits);
             return numeric_outcome(lhs, rhs, tol, digits);
         }});

    reg.push_back(
        {"r08", "harmonic-weighted Stirling series vs hook and interior-two values",
         CheckMode::numeric,
         {{"p", 1, 4, 1}, {"m", 0, 4, 1}},
         0,
         0.0,
         [](const ParamMap& pm, int digits, double tol) {
             const int p = pm.at("p");
             const int m = pm.at("m");
             const HPReal lhs = h_stirling_series(p, m + 1, digits);
             HPReal rhs = mzv(hook_index(p + 2, m), digits) * Rational(p + 1);
             for (int i = 1; i <= m; ++i)
                 rhs += mzv(interior_two(p + 1, i - 1, m - i), digits);
             return numeric_outcome(lhs, rhs, tol, digits);
         }});

    reg.push_back(
        {"r09", "zeta_n-weighted Stirling series vs product minus interior-two value",
         CheckMode::numeric,
         {{"m", 1, 4, 1}, {"r", 2, 5, 2}, {"p", 1, 4, 2}},
         0,
         0.0,
         [](const ParamMap& pm, int digits, double tol) {
             const int m = pm.at("m");
             const int r = pm.at("r");
             const int p = pm.at("p");
             if (p + r - 1 > max_mzv_depth || m + p + r > max_mzv_weight)
                 throw std::invalid_argument(
                     "r09 instance outside the supported depth/weight envelope");
             const HPReal lhs = z_stirling_series(m, r, p, digits);
             const HPReal rhs =
                 riemann_zeta(r, digits) * mzv(hook_index(m + 1, p - 1), digits) -
                 mzv(interior_two(m + 1, p - 1, r - 2), digits);
             return numeric_outcome(lhs, rhs, tol, digits);
         }});

    reg.push_back(
        {"r10", "zeta_n-weighted Stirling series is symmetric under index swap",
         CheckMode::numeric,
         {{"m", 1, 4, 2}, {"r", 1, 4, 3}},
         0,
         0.0,
         [](const ParamMap& pm, int digits, double tol) {
             const int m = pm.at("m");
             const int r = pm.at("r");
             const HPReal lhs = z_stirling_series(m, r + 1, 1, digits);
             const HPReal rhs = z_stirling_series(r, m + 1, 1, digits);
             return numeric_outcome(lhs, rhs, tol, digits);
         }});

    reg.push_back(
        {"r11", "Bell-weighted Stirling series as a binomial hook combination",
         CheckMode::numeric,
         {{"k", 0, 4, 1}, {"m", 0, 3, 1}, {"p", 1, 4, 1}},
         0,
         0.0,
         [](const ParamMap& pm, int digits, double tol) {
             const int k = pm.at("k");
             const int m = pm.at("m");
             const int p = pm.at("p");
             const HPReal lhs = y_stirling_series(k, p, m, digits);
             HPReal rhs = HPReal::zero(digits);
             for (const auto& iv : bounded_vectors(m, k)) {
                 int s = 0;
                 for (int v : iv) s += v;
                 Composition w;
                 w.parts.push_back(p + k + 1 - s);
                 for (int j = m - 1; j >= 0; --j)
                     w.parts.push_back(iv[static_cast<size_t>(j)] + 1);
                 rhs += mzv(w, digits) *
                        Rational(binomial(ul(p + k - s), ul(p)));
             }
             rhs *= fact(k);
             return numeric_outcome(lhs, rhs, tol, digits);
         }});

    reg.push_back(
        {"r12", "paired Bell-Stirling series reduce to products of hook values",
         CheckMode::numeric,
         {{"p", 1, 3, 1}, {"k", 1, 3, 2}, {"m", 1, 3, 2}},
         0,
         0.0,
         [](const ParamMap& pm, int digits, double tol) {
             const int p = pm.at("p");
             const int k = pm.at("k");
             const int m = pm.at("m");
             const HPReal lhs =
                 y_stirling_series(k, p, m, digits) * fact(p) +
                 y_stirling_series(p, k, m, digits) *
                     (fact(k) * neg_one_pow(m - 1));
             HPReal rhs = HPReal::zero(digits);
             for (int i = 1; i <= m; ++i) {
                 rhs += mzv(hook_index(i + 1, k - 1), digits) *
                        mzv(hook_index(m + 2 - i, p - 1), digits) *
                        neg_one_pow(i - 1);
             }
             rhs *= fact(p) * fact(k);
             return numeric_outcome(lhs, rhs, tol, digits);
         }});

    reg.push_back(
        {"r13", "paired Bell-Stirling series at the symmetric point give a zeta product",
         CheckMode::numeric,
         {{"p", 1, 3, 1}, {"k", 1, 3, 2}},
         0,
         0.0,
         [](const ParamMap& pm, int digits, double tol) {
             const int p = pm.at("p");
             const int k = pm.at("k");
             const HPReal lhs = y_stirling_series(k, p, 1, digits) * fact(p) +
                                y_stirling_series(p, k, 1, digits) * fact(k);
             const HPReal rhs = riemann_zeta(k + 1, digits) *
                                riemann_zeta(p + 1, digits) *
                                (fact(k) * fact(p));
             return numeric_outcome(lhs, rhs, tol, digits);
         }});

    reg.push_back(
        {"r14", "polylog moment closed form vs partial-fraction series",
         CheckMode::numeric,
         {{"n", 1, 6, 2}, {"p", 1, 4, 2}},
         0,
         0.0,
         [](const ParamMap& pm, int digits, double tol) {
             const int n = pm.at("n");
             const int p = pm.at("p");
             NumericEnv env(digits);
             const HPReal lhs = eval_algebra(li_moment(n, p), env);
             SeriesSpec spec;
             spec.term = [n, p](long k) -> Rational {
                 return inv_power(ul(k), ul(p)) / (k + n);
             };
             spec.decay = {0, p + 1};
             const int bmax = p + 1 + tail_extra_powers;
             Expansion pw;
             pw[{0, p}] = HPReal::one(digits + 10);
             spec.tail = expansion_mul(
                 pw, shifted_power_asymptotics(n, 1, bmax, digits), bmax);
             const HPReal rhs = sum_series(spec, digits);
             return numeric_outcome(lhs, rhs, tol, digits);
         }});

    reg.push_back(
        {"r15", "log-weighted polylog moment closed form vs its series",
         CheckMode::numeric,
         {{"n", 1, 6, 2}, {"p", 1, 4, 2}},
         0,
         0.0,
         [](const ParamMap& pm, int digits, double tol) {
             const int n = pm.at("n");
             const int p = pm.at("p");
             NumericEnv env(digits);
             const HPReal lhs = eval_algebra(li_log_moment(n, 1, p), env);
             SeriesSpec spec;
             spec.term = [n, p](long k) -> Rational {
                 return -inv_power(ul(k), ul(p)) / ((k + n) * (k + n));
             };
             spec.decay = {0, p + 2};
             const int bmax = p + 2 + tail_extra_powers;
             Expansion pw;
             pw[{0, p}] = HPReal::one(digits + 10);
             const Expansion prod = expansion_mul(
                 pw, shifted_power_asymptotics(n, 2, bmax, digits), bmax);
             Expansion tail;
             expansion_add_scaled(tail, prod, HPReal::from_long(-1, digits + 10));
             spec.tail = tail;
             const HPReal rhs = sum_series(spec, digits);
             return numeric_outcome(lhs, rhs, tol, digits);
         }});

    reg.push_back(
        {"r16", "star hook closed form vs direct star summation",
         CheckMode::numeric,
         {{"p", 1, 4, 2}, {"m", 1, 5, 2}},
         0,
         0.0,
         [](const ParamMap& pm, int digits, double tol) {
             const int p = pm.at("p");
             const int m = pm.at("m");
             NumericEnv env(digits);
             const HPReal lhs = eval_algebra(star_hook(p, m), env);
             const HPReal rhs = mzv_star(hook_index(p + 1, m), digits);
             return numeric_outcome(lhs, rhs, tol, digits);
         }});

    reg.push_back(
        {"r17", "star hook values via the harmonic-weighted Stirling series",
         CheckMode::numeric,
         {{"p", 2, 4, 2}, {"m", 1, 4, 2}},
         0,
         0.0,
         [](const ParamMap& pm, int digits, double tol) {
             const int p = pm.at("p");
             const int m = pm.at("m");
             const HPReal lhs = mzv_star(hook_index(p + 1, m), digits);
             HPReal rhs = h_stirling_series(m, p, digits) * neg_one_pow(p - 1);
             for (int i = 0; i <= p - 2; ++i) {
                 rhs += riemann_zeta(p - i, digits) *
                        mzv(hook_index(m + 1, i), digits) * neg_one_pow(i);
             }
             return numeric_outcome(lhs, rhs, tol, digits);
         }});

    reg.push_back(
        {"r18", "shifted star hook combination vs a zeta/hook polynomial",
         CheckMode::numeric,
         {{"p", 2, 3, 2}, {"m", 1, 3, 2}},
         0,
         0.0,
         [](const ParamMap& pm, int digits, double tol) {
             const int p = pm.at("p");
             const int m = pm.at("m");
             HPReal lhs = mzv_star(hook_index(p + 2, m), digits);
             for (int i = 1; i <= m; ++i)
                 lhs += mzv_star(interior_two(p + 1, i - 1, m - i), digits);
             for (int i = 0; i <= m - 1; ++i)
                 lhs -= riemann_zeta(m - i + 1, digits) *
                        mzv_star(hook_index(p + 1, i), digits);
             const Rational sg = neg_one_pow(p + 1);
             HPReal rhs = mzv(hook_index(m + 2, p), digits) *
                          (sg * Rational(p) * Rational(m + 1));
             for (int i = 1; i <= p - 1; ++i) {
                 for (int j = 1; j <= p - i; ++j) {
                     rhs += riemann_zeta(p + 2 - i - j, digits) *
                            mzv(hook_index(m + 1, i + j - 1), digits) *
                            neg_one_pow(i + j);
                 }
             }
             for (int i = 0; i <= p - 1; ++i)
                 rhs += mzv(interior_two(m + 1, i, p - 1 - i), digits) *
                        (sg * Rational(p));
             rhs -= mzv(interior_two(m + 1, p - 1, 0), digits) * sg;
             return numeric_outcome(lhs, rhs, tol, digits);
         }});

    reg.push_back(
        {"r19", "head-two star combination identity",
         CheckMode::numeric,
         {{"m", 1, 4, 2}},
         0,
         0.0,
         [](const ParamMap& pm, int digits, double tol) {
             const int m = pm.at("m");
             HPReal lhs = mzv_star(hook_index(3, m), digits);
             for (int i = 1; i <= m; ++i)
                 lhs += mzv_star(interior_two(2, i - 1, m - i), digits);
             HPReal rhs = mzv(hook_index(m + 2, 1), digits) * Rational(m + 1);
             for (int i = 0; i <= m - 1; ++i)
                 rhs += riemann_zeta(m - i + 1, digits) *
                        mzv_star(hook_index(2, i), digits);
             return numeric_outcome(lhs, rhs, tol, digits);
         }});

    reg.push_back(
        {"r20", "star hook closed forms at small heads, exact",
         CheckMode::exact_symbolic,
         {{"m", 1, 5, 5}},
         0,
         0.0,
         [](const ParamMap& pm, int, double) {
             const int mmax = pm.at("m");
             ExactSweep sw;
             for (int m = 1; m <= mmax; ++m) {
                 const AlgebraElement got = star_hook(1, m);
                 const AlgebraElement want = ael_zeta(m + 2) * Rational(m + 1);
                 sw.add("head 2, m=" + std::to_string(m), format_algebra(got),
                        format_algebra(want), got == want);
             }
             for (int m = 1; m <= mmax; ++m) {
                 const AlgebraElement got = star_hook(2, m);
                 AlgebraElement want;
                 if (m == 1) {
                     want = parse_algebra("5/4*z(4)");
                 } else {
                     want = ael_zeta(2) * ael_zeta(m + 1) -
                            hook_mzv(m, 2) * Rational(m + 1) -
                            ael_mzv(Composition{m + 1, 2});
                 }
                 sw.add("head 3, m=" + std::to_string(m), format_algebra(got),
                        format_algebra(want), got == want);
             }
             const AlgebraElement got34 = star_hook(3, 4);
             const AlgebraElement want34 = parse_algebra(
                 "107/16*z(8)-6*z(3)*z(5)+1/2*z(2)*z(3)^2+3/4*S(2,6)");
             sw.add("head 4, m=4", format_algebra(got34), format_algebra(want34),
                    got34 == want34);
             return sw.outcome();
         }});

    reg.push_back(
        {"r21", "stored nonlinear Euler sum closed forms vs direct summation",
         CheckMode::numeric,
         {},
         0,
         0.0,
         [](const ParamMap&, int digits, double tol) {
             NumericEnv env(digits);
             NumericSweep sw(tol);
             for (const auto& row : euler_rows()) {
                 sw.add(row.label, euler_sum(row.s, row.q, digits),
                        eval_algebra(parse_algebra(row.form), env));
             }
             const HPReal e14 = euler_sum({1, 1, 1, 1}, 4, digits);
             const HPReal e124 = euler_sum({1, 1, 2}, 4, digits);
             sw.add("6 S_{1^22,4} - S_{1^4,4}", e124 * Rational(6) - e14,
                    eval_algebra(
                        parse_algebra("-17*S(2,6)-10*z(2)*z(3)^2"
                                      "+104*z(3)*z(5)-5911/72*z(8)"),
                        env));
             sw.add("S_{1^4,4} + 6 S_{1^22,4}", e14 + e124 * Rational(6),
                    eval_algebra(
                        parse_algebra("956/9*z(8)-80*z(3)*z(5)"
                                      "-14*z(2)*z(3)^2+35*S(2,6)"),
                        env));
             return sw.outcome(digits);
         }});

    reg.push_back(
        {"r22", "star hook antisymmetry relation",
         CheckMode::numeric,
         {{"n", 1, 3, 1}, {"k", 1, 3, 2}},
         0,
         0.0,
         [](const ParamMap& pm, int digits, double tol) {
             const int n = pm.at("n");
             const int k = pm.at("k");
             const HPReal lhs =
                 mzv_star(hook_index(k + 1, n), digits) * neg_one_pow(k) -
                 mzv_star(hook_index(n + 1, k), digits) * neg_one_pow(n);
             HPReal rhs = mzv(hook_index(k + 2, n - 1), digits) * Rational(k) -
                          mzv(hook_index(n + 2, k - 1), digits) * Rational(n);
             for (int j = 0; j <= k - 2; ++j)
                 rhs += riemann_zeta(k - j, digits) *
                        mzv(hook_index(n + 1, j), digits) *
                        (neg_one_pow(k) * neg_one_pow(j));
             for (int j = 0; j <= n - 2; ++j)
                 rhs -= riemann_zeta(n - j, digits) *
                        mzv(hook_index(k + 1, j), digits) *
                        (neg_one_pow(n) * neg_one_pow(j));
             return numeric_outcome(lhs, rhs, tol, digits);
         }});

    reg.push_back(
        {"r23", "Stirling series differences match interior-two differences",
         CheckMode::numeric,
         {{"p", 1, 4, 1}, {"m", 1, 4, 2}},
         0,
         0.0,
         [](const ParamMap& pm, int digits, double tol) {
             const int p = pm.at("p");
             const int m = pm.at("m");
             NumericSweep sw(tol);
             const HPReal a =
                 h_stirling_series(p, m, digits) - h_stirling_series(m, p, digits);
             const HPReal b =
                 mzv(hook_index(p + 2, m - 1), digits) * Rational(p) -
                 mzv(hook_index(m + 2, p - 1), digits) * Rational(m);
             sw.add("series difference", a, b);
             HPReal c = HPReal::zero(digits);
             for (int i = 1; i <= p - 1; ++i)
                 c += mzv(interior_two(m + 1, i - 1, p - 1 - i), digits);
             for (int i = 1; i <= m - 1; ++i)
                 c -= mzv(interior_two(p + 1, i - 1, m - 1 - i), digits);
             const HPReal d = mzv(hook_index(p + 2, m - 1), digits) -
                              mzv(hook_index(m + 2, p - 1), digits);
             sw.add("interior-two difference", c, d);
             return sw.outcome(digits);
         }});

    reg.push_back(
        {"r24", "recursive pair: A_m(n) = m! B_m(n) over fuzzed rational inputs",
         CheckMode::exact_rational,
         {{"m", 1, 6, 6}, {"n", 1, 6, 6}, {"vectors", 1, 1000, 100}},
         0,
         0.0,
         [](const ParamMap& pm, int, double) {
             const int mmax = pm.at("m");
             const int nmax = pm.at("n");
             const int trials = pm.at("vectors");
             std::mt19937 rng(12345u);
             std::uniform_int_distribution<int> num(-9, 9);
             std::uniform_int_distribution<int> den(1, 9);
             ExactSweep sw;
             for (int t = 1; t <= trials; ++t) {
                 std::vector<Rational> xs;
                 xs.reserve(static_cast<size_t>(nmax));
                 for (int i = 0; i < nmax; ++i) {
                     const int a = num(rng);
                     const int b = den(rng);
                     xs.push_back(rat(a, b));
                 }
                 for (int m = 1; m <= mmax; ++m) {
                     for (long n = 1; n <= nmax; ++n) {
                         const Rational lhs = seq_A(m, n, xs);
                         const Rational rhs = fact(m) * seq_B(m, n, xs);
                         sw.add("t=" + std::to_string(t) + ",m=" +
                                    std::to_string(m) + ",n=" + std::to_string(n),
                                rational_to_string(lhs), rational_to_string(rhs),
                                lhs == rhs);
                     }
                 }
             }
             return sw.outcome();
         }});

    reg.push_back(
        {"r25", "recursive pair: Abar_m(n) = m! Bbar_m(n) over fuzzed rational inputs",
         CheckMode::exact_rational,
         {{"m", 1, 6, 6}, {"n", 1, 6, 6}, {"vectors", 1, 1000, 100}},
         0,
         0.0,
         [](const ParamMap& pm, int, double) {
             const int mmax = pm.at("m");
             const int nmax = pm.at("n");
             const int trials = pm.at("vectors");
             std::mt19937 rng(67890u);
             std::uniform_int_distribution<int> num(-9, 9);
             std::uniform_int_distribution<int> den(1, 9);
             ExactSweep sw;
             for (int t = 1; t <= trials; ++t) {
                 std::vector<Rational> xs;
                 xs.reserve(static_cast<size_t>(nmax));
                 for (int i = 0; i < nmax; ++i) {
                     const int a = num(rng);
                     const int b = den(rng);
                     xs.push_back(rat(a, b));
                 }
                 for (int m = 1; m <= mmax; ++m) {
                     for (long n = 1; n <= nmax; ++n) {
                         const Rational lhs = seq_Abar(m, n, xs);
                         const Rational rhs = fact(m) * seq_Bbar(m, n, xs);
                         sw.add("t=" + std::to_string(t) + ",m=" +
                                    std::to_string(m) + ",n=" + std::to_string(n),
                                rational_to_string(lhs), rational_to_string(rhs),
                                lhs == rhs);
                     }
                 }
             }
             return sw.outcome();
         }});

    reg.push_back(
        {"r26", "repeated-index zeta closed forms vs direct values",
         CheckMode::numeric,
         {{"p", 2, 3, 2}, {"m", 0, 4, 4}},
         0,
         0.0,
         [](const ParamMap& pm, int digits, double tol) {
             const int p = pm.at("p");
             const int mmax = pm.at("m");
             NumericEnv env(digits);
             NumericSweep sw(tol);
             for (int m = 0; m <= mmax; ++m) {
                 const std::string suffix =
                     "({" + std::to_string(p) + "}_" + std::to_string(m) + ")";
                 const HPReal plain =
                     m == 0 ? HPReal::one(digits)
                            : mzv(Composition(repeat(p, m)), digits);
                 sw.add("zeta" + suffix, eval_algebra(power_zeta(p, m), env),
                        plain);
                 const HPReal star =
                     m == 0 ? HPReal::one(digits)
                            : mzv_star(Composition(repeat(p, m)), digits);
                 sw.add("zeta*" + suffix,
                        eval_algebra(power_zeta_star(p, m), env), star);
             }
             return sw.outcome(digits);
         }});

    reg.push_back(
        {"r27", "repeated-index Hurwitz recurrences at rational shifts",
         CheckMode::numeric,
         {{"p", 2, 3, 2}, {"m", 1, 3, 2}, {"a_num", 0, 3, 1}, {"a_den", 1, 4, 2}},
         0,
         0.0,
         [](const ParamMap& pm, int digits, double tol) {
             const int p = pm.at("p");
             const int m = pm.at("m");
             const Rational a = rat(pm.at("a_num"), pm.at("a_den"));
             NumericSweep sw(tol);
             {
                 const HPReal lhs =
                     hurwitz_mzv(Composition(repeat(p, m)), a, digits);
                 HPReal rhs = HPReal::zero(digits);
                 for (int i = 0; i <= m - 1; ++i) {
                     const HPReal head =
                         i == 0 ? HPReal::one(digits)
                                : hurwitz_mzv(Composition(repeat(p, i)), a,
                                              digits);
                     rhs += head * hurwitz_zeta(p * (m - i), a, digits) *
                            neg_one_pow(i);
                 }
                 const Rational c = neg_one_pow(m - 1) / m;
                 rhs *= c;
                 sw.add("plain recurrence", lhs, rhs);
             }
             {
                 const HPReal lhs =
                     hurwitz_mzv_star(Composition(repeat(p, m)), a, digits);
                 HPReal rhs = HPReal::zero(digits);
                 for (int i = 0; i <= m - 1; ++i) {
                     const HPReal head =
                         i == 0 ? HPReal::one(digits)
                                : hurwitz_mzv_star(Composition(repeat(p, i)), a,
                                                   digits);
                     rhs += head * hurwitz_zeta(p * (m - i), a, digits);
                 }
                 rhs *= rat(1, m);
                 sw.add("star recurrence", lhs, rhs);
             }
             return sw.outcome(digits);
         }});

    reg.push_back(
        {"r28", "promoted-entry sum closed forms vs direct composition sums",
         CheckMode::numeric,
         {{"m", 1, 3, 2}, {"p", 2, 3, 2}},
         0,
         0.0,
         [](const ParamMap& pm, int digits, double tol) {
             const int m = pm.at("m");
             const int p = pm.at("p");
             NumericEnv env(digits);
             NumericSweep sw(tol);
             HPReal direct = HPReal::zero(digits);
             HPReal direct_star = HPReal::zero(digits);
             for (int j = 0; j <= m - 1; ++j) {
                 std::vector<int> w = repeat(p, j);
                 w.push_back(p + 1);
                 for (int i = 0; i < m - 1 - j; ++i) w.push_back(p);
                 direct += mzv(Composition(w), digits);
                 direct_star += mzv_star(Composition(w), digits);
             }
             sw.add("plain sum", eval_algebra(h_sum(m, p), env), direct);
             sw.add("star sum", eval_algebra(h_star_sum(m, p), env),
                    direct_star);
             return sw.outcome(digits);
         }});

    reg.push_back(
        {"r29", "table of log-power integral closed forms, exact",
         CheckMode::exact_symbolic,
         {},
         0,
         0.0,
         [](const ParamMap&, int, double) {
             ExactSweep sw;
             for (const auto& row : w_rows()) {
                 const AlgebraElement got = w_integral(row.m, row.k);
                 const AlgebraElement want = parse_algebra(row.form);
                 sw.add("W(" + std::to_string(row.m) + "," +
                            std::to_string(row.k) + ")",
                        format_algebra(got), format_algebra(want), got == want);
             }
             return sw.outcome();
         }});

    reg.push_back(
        {"r30", "published Euler sum table: both 30-digit columns",
         CheckMode::numeric,
         {},
         default_closed_form_digits,
         1e-25,
         [](const ParamMap&, int digits, double tol) {
             NumericEnv env(digits);
             NumericEnv env12(default_direct_digits);
             const HPReal rel_tol = hp_from_double(tol, 20);
             const HPReal direct_tol = hp_from_double(1e-10, 20);
             const HPReal pairing_thresh = hp_from_double(1e-3, 20);
             bool pass = true;
             HPReal worst_rel;
             std::string worst_rel_label;
             HPReal worst_rel_lhs, worst_rel_rhs;
             HPReal worst_abs;
             std::string worst_abs_label;
             std::string flags;
             bool have_rel = false, have_abs = false;
             auto consider_rel = [&](const HPReal& r, const std::string& label,
                                     const HPReal& l, const HPReal& rr) {
                 if (!have_rel || r > worst_rel) {
                     worst_rel = r;
                     worst_rel_label = label;
                     worst_rel_lhs = l;
                     worst_rel_rhs = rr;
                     have_rel = true;
                 }
             };
             for (const auto& row : table_rows()) {
                 const AlgebraElement form = parse_algebra(row.form);
                 const HPReal v = eval_algebra(form, env);
                 const HPReal c2 = HPReal::from_string(row.col2, digits + 10);
                 const HPReal r2 = abs(v - c2) / abs(c2);
                 consider_rel(r2, std::string(row.label) + " closed-form column",
                              v, c2);
                 const HPReal es = euler_sum(row.s, row.q, digits);
                 const HPReal c3 = HPReal::from_string(row.col3, digits + 10);
                 const HPReal r3 = abs(es - c3) / abs(c3);
                 consider_rel(r3, std::string(row.label) + " direct column", es,
                              c3);
                 if (!(r2 < rel_tol) || !(r3 < rel_tol)) pass = false;
                 // The label determines which Euler sum is summed directly; a
                 // gross mismatch against the stored closed form would mean
                 // the published label/value pairing is inconsistent.
                 const HPReal v12 = eval_algebra(form, env12);
                 const HPReal es12 =
                     euler_sum(row.s, row.q, default_direct_digits);
                 const HPReal d12 = abs(v12 - es12);
                 if (!have_abs || d12 > worst_abs) {
                     worst_abs = d12;
                     worst_abs_label = row.label;
                     have_abs = true;
                 }
                 if (!(d12 < direct_tol)) {
                     pass = false;
                     if (!(d12 < pairing_thresh)) {
                         flags += std::string("; ") + row.label +
                                  ": printed label does not match the closed-form"
                                  " value (pairing kept as printed)";
                     }
                 }
             }
             CheckOutcome o;
             o.pass = pass;
             o.lhs = worst_rel_lhs.str(digits);
             o.rhs = worst_rel_rhs.str(digits);
             o.diff = worst_rel.str(3);
             o.note = "16 rows; both published columns compared by relative "
                      "difference (worst at " +
                      worst_rel_label + "); 12-digit direct sums vs closed forms"
                      " within " +
                      worst_abs.str(3) + " (worst at " + worst_abs_label +
                      ", budget 1e-10)" + flags;
             return o;
         }});

    reg.push_back(
        {"r31", "stuffle product: zeta(a)zeta(b) = zeta(a,b)+zeta(b,a)+zeta(a+b)",
         CheckMode::numeric,
         {{"a", 2, 4, 2}, {"b", 2, 4, 3}},
         0,
         0.0,
         [](const ParamMap& pm, int digits, double tol) {
             const int a = pm.at("a");
             const int b = pm.at("b");
             const HPReal lhs =
                 riemann_zeta(a, digits) * riemann_zeta(b, digits);
             const HPReal rhs = mzv(Composition{a, b}, digits) +
                                mzv(Composition{b, a}, digits) +
                                riemann_zeta(a + b, digits);
             return numeric_outcome(lhs, rhs, tol, digits);
         }});

    return reg;
}

} // namespace

std::string check_mode_name(CheckMode m) {
    switch (m) {
        case CheckMode::exact_rational: return "EXACT_RATIONAL";
        case CheckMode::exact_symbolic: return "EXACT_SYMBOLIC";
        case CheckMode::numeric: return "NUMERIC";
    }
    return "UNKNOWN";
}

const std::vector<IdentityEntry>& identity_registry() {
    static const std::vector<IdentityEntry> reg = build_registry();
    return reg;
}

const IdentityEntry* find_identity(const std::string& id) {
    for (const auto& e : identity_registry())
        if (e.id == id) return &e;
    return nullptr;
}

EvalReport run_identity(const std::string& id, const ParamMap& params,
                        int digits, double tol) {
    const IdentityEntry* e = find_identity(id);
    if (!e) throw std::invalid_argument("unknown identity id: " + id);
    for (const auto& [name, value] : params) {
        const ParamSpec* ps = nullptr;
        for (const auto& q : e->params) {
            if (q.name == name) {
                ps = &q;
                break;
            }
        }
        if (!ps)
            throw std::invalid_argument("unknown parameter '" + name +
                                        "' for " + id);
        if (value < ps->min_value || value > ps->max_value)
            throw std::invalid_argument(
                "parameter '" + name + "' out of range [" +
                std::to_string(ps->min_value) + ", " +
                std::to_string(ps->max_value) + "] for " + id);
    }
    ParamMap resolved;
    std::vector<std::pair<std::string, int>> ordered;
    for (const auto& ps : e->params) {
        int v = ps.def_value;
        if (auto it = params.find(ps.name); it != params.end()) v = it->second;
        resolved[ps.name] = v;
        ordered.emplace_back(ps.name, v);
    }
    const int eff_digits =
        digits > 0 ? digits
                   : (e->default_digits > 0 ? e->default_digits
                                            : default_direct_digits);
    const double eff_tol =
        tol > 0 ? tol
                : (e->default_tol > 0 ? e->default_tol : default_numeric_tol);
    const auto t0 = std::chrono::steady_clock::now();
    const CheckOutcome oc = e->check(resolved, eff_digits, eff_tol);
    const auto t1 = std::chrono::steady_clock::now();
    EvalReport r;
    r.id = e->id;
    r.params = std::move(ordered);
    r.mode = check_mode_name(e->mode);
    r.lhs = oc.lhs;
    r.rhs = oc.rhs;
    r.diff = oc.diff;
    r.pass = oc.pass;
    r.digits = eff_digits;
    r.tol = eff_tol;
    r.elapsed_ms = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
    r.note = oc.note;
    return r;
}

std::string report_to_json(const EvalReport& r) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (const auto& [name, value] : r.params) p[name] = value;
    j["params"] = p;
    j["mode"] = r.mode;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["diff"] = r.diff;
    j["pass"] = r.pass;
    j["digits"] = r.digits;
    j["tol"] = r.tol;
    j["elapsed_ms"] = r.elapsed_ms;
    j["note"] = r.note;
    return j.dump();
}

} // namespace zetasum
