#include "zetasum/algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "zetasum/constants.hpp"
#include "zetasum/errors.hpp"

namespace zetasum {

int Atom::weight() const {
    switch (kind) {
        case Kind::Z: return a;
        case Kind::M: return comp.weight();
        case Kind::S: return a + b;
    }
    return 0;
}

std::string Atom::str() const {
    switch (kind) {
        case Kind::Z: return "z(" + std::to_string(a) + ")";
        case Kind::M: return "m(" + format_composition(comp) + ")";
        case Kind::S:
            return "S(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
    return "";
}

bool Atom::operator==(const Atom& o) const {
    return kind == o.kind && a == o.a && b == o.b && comp == o.comp;
}

Atom zeta_atom(int k) {
    if (k < 2) throw std::domain_error("z(k) needs k >= 2");
    Atom at;
    at.kind = Atom::Kind::Z;
    at.a = k;
    return at;
}

Atom mzv_atom(const Composition& s) {
    if (!s.admissible()) throw std::domain_error("m(s) needs an admissible index");
    if (s.depth() == 1) return zeta_atom(s.parts[0]);
    Atom at;
    at.kind = Atom::Kind::M;
    at.comp = s;
    return at;
}

Atom euler_atom(int p, int q) {
    if (p < 1 || q < 2) throw std::domain_error("S(p,q) needs p >= 1 and q >= 2");
    Atom at;
    at.kind = Atom::Kind::S;
    at.a = p;
    at.b = q;
    return at;
}

int Monomial::weight() const {
    int w = 0;
    for (const auto& [at, e] : factors) w += at.weight() * e;
    return w;
}

std::string Monomial::str() const {
    std::string out;
    for (const auto& [at, e] : factors) {
        if (!out.empty()) out += "*";
        out += at.str();
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

bool Monomial::operator<(const Monomial& o) const {
    int w = weight(), ow = o.weight();
    if (w != ow) return w < ow;
    return str() < o.str();
}

Monomial mono_mul(const Monomial& x, const Monomial& y) {
    Monomial r;
    auto i = x.factors.begin();
    auto j = y.factors.begin();
    while (i != x.factors.end() || j != y.factors.end()) {
        if (j == y.factors.end() || (i != x.factors.end() && i->first < j->first)) {
            r.factors.push_back(*i++);
        } else if (i == x.factors.end() || j->first < i->first) {
            r.factors.push_back(*j++);
        } else {
            r.factors.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    return r;
}

namespace {

// zeta(a)zeta(b) for even a,b equals r * zeta(a+b) with
// r = |B_a||B_b|(a+b)! / (2 a! b! |B_{a+b}|), from the even-zeta closed form.
Rational even_zeta_ratio(int a, int b) {
    Rational r = abs(bernoulli(static_cast<unsigned long>(a))) *
                 abs(bernoulli(static_cast<unsigned long>(b))) *
                 Rational(factorial(static_cast<unsigned long>(a + b)));
    r /= Rational(2) * Rational(factorial(static_cast<unsigned long>(a))) *
         Rational(factorial(static_cast<unsigned long>(b))) *
         abs(bernoulli(static_cast<unsigned long>(a + b)));
    return r;
}

// Canonicalize a raw monomial: fold every pair of even-index z atoms into
// one even zeta, collecting the rational factor that the fold produces.
std::pair<Rational, Monomial> normalize_monomial(const Monomial& raw) {
    Rational factor(1);
    int even_k = 0;
    Monomial rest;
    for (const auto& [at, e] : raw.factors) {
        if (at.kind == Atom::Kind::Z && at.a % 2 == 0) {
            for (int c = 0; c < e; ++c) {
                if (even_k == 0) {
                    even_k = at.a;
                } else {
                    factor *= even_zeta_ratio(even_k, at.a);
                    even_k += at.a;
                }
            }
        } else {
            rest.factors.emplace_back(at, e);
        }
    }
    if (even_k == 0) return {factor, rest};
    Monomial folded = mono_mul(rest, Monomial{{{zeta_atom(even_k), 1}}});
    return {factor, folded};
}

} // namespace

AlgebraElement AlgebraElement::constant(const Rational& c) {
    AlgebraElement e;
    e.add_term(c, Monomial{});
    return e;
}

AlgebraElement AlgebraElement::from_atom(const Atom& a) {
    AlgebraElement e;
    e.add_term(Rational(1), Monomial{{{a, 1}}});
    return e;
}

Rational AlgebraElement::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool AlgebraElement::homogeneous(int& weight_out) const {
    weight_out = 0;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        if (first) {
            weight_out = mono.weight();
            first = false;
        } else if (mono.weight() != weight_out) {
            return false;
        }
    }
    return true;
}

void AlgebraElement::add_term(const Rational& c, Monomial m) {
    if (c == 0) return;
    auto [factor, nm] = normalize_monomial(m);
    Rational& slot = terms_[nm];
    slot += c * factor;
    if (slot == 0) terms_.erase(nm);
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r = *this;
    for (auto& [mono, c] : r.terms_) c = -c;
    return r;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    for (const auto& [mono, c] : o.terms_) {
        Rational& slot = terms_[mono];
        slot += c;
        if (slot == 0) terms_.erase(mono);
    }
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    for (const auto& [mono, c] : o.terms_) {
        Rational& slot = terms_[mono];
        slot -= c;
        if (slot == 0) terms_.erase(mono);
    }
    return *this;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    r += o;
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    r -= o;
    return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    AlgebraElement r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            r.add_term(ca * cb, mono_mul(ma, mb));
    return r;
}

AlgebraElement& AlgebraElement::operator*=(const AlgebraElement& o) {
    *this = *this * o;
    return *this;
}

AlgebraElement AlgebraElement::operator*(const Rational& c) const {
    AlgebraElement r;
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& [mono, coef] : r.terms_) coef *= c;
    return r;
}

std::string AlgebraElement::str() const { return format_algebra(*this); }

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) { return x + y; }

AlgebraElement scale(const Rational& c, const AlgebraElement& x) { return x * c; }

AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) { return x * y; }

AlgebraElement ael_zeta(int k) { return AlgebraElement::from_atom(zeta_atom(k)); }

AlgebraElement ael_mzv(const Composition& s) { return AlgebraElement::from_atom(mzv_atom(s)); }

AlgebraElement ael_euler(int p, int q) { return AlgebraElement::from_atom(euler_atom(p, q)); }

AlgebraElement ael_const(const Rational& c) { return AlgebraElement::constant(c); }

std::vector<Composition> star_to_mzv(const Composition& s) {
    if (!s.admissible()) throw std::domain_error("star expansion needs an admissible index");
    int gaps = s.depth() - 1;
    std::vector<Composition> out;
    out.reserve(1u << gaps);
    for (unsigned long mask = 0; mask < (1ul << gaps); ++mask) {
        Composition c;
        c.parts.push_back(s.parts[0]);
        for (int g = 0; g < gaps; ++g) {
            if (mask & (1ul << g))
                c.parts.back() += s.parts[static_cast<size_t>(g) + 1];
            else
                c.parts.push_back(s.parts[static_cast<size_t>(g) + 1]);
        }
        out.push_back(std::move(c));
    }
    return out;
}

Composition duality(const Composition& s) {
    if (!s.admissible()) throw std::domain_error("duality needs an admissible index");
    // Blocks (m_i+2, {1}_{n_i}); dual reverses the list and swaps m <-> n.
    std::vector<std::pair<int, int>> blocks;  // (m_i, n_i)
    size_t i = 0;
    while (i < s.parts.size()) {
        int m = s.parts[i] - 2;
        ++i;
        int n = 0;
        while (i < s.parts.size() && s.parts[i] == 1) {
            ++n;
            ++i;
        }
        blocks.emplace_back(m, n);
    }
    Composition d;
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
        d.parts.push_back(it->second + 2);
        for (int r = 0; r < it->first; ++r) d.parts.push_back(1);
    }
    return d;
}

std::string format_algebra(const AlgebraElement& e) {
    if (e.is_zero()) return "0";
    std::string out;
    for (const auto& [mono, c] : e.terms()) {
        bool neg = c < 0;
        Rational mag = abs(c);
        std::string part;
        if (mono.is_empty()) {
            part = rational_to_string(mag);
        } else if (mag == 1) {
            part = mono.str();
        } else {
            part = rational_to_string(mag) + "*" + mono.str();
        }
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? "-" : "+";
        }
        out += part;
    }
    return out;
}

namespace {

struct AlgCursor {
    const std::string& text;
    size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void skip_spaces() {
        while (!done() && text[pos] == ' ') ++pos;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos); }

    long read_uint(long limit = 1000000) {
        skip_spaces();
        size_t start = pos;
        while (!done() && peek() >= '0' && peek() <= '9') ++pos;
        if (pos == start) fail("expected a number");
        if (pos - start > 9) {
            pos = start;
            fail("number too large");
        }
        long v = std::stol(text.substr(start, pos - start));
        if (v > limit) {
            pos = start;
            fail("number too large");
        }
        return v;
    }

    void expect(char c) {
        skip_spaces();
        if (done() || peek() != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }

    bool try_consume(char c) {
        skip_spaces();
        if (!done() && peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

Rational read_rational(AlgCursor& cur) {
    long num = cur.read_uint();
    if (cur.try_consume('/')) {
        size_t den_pos = cur.pos;
        long den = cur.read_uint();
        if (den == 0) {
            cur.pos = den_pos;
            cur.fail("zero denominator");
        }
        return rat(num, den);
    }
    return Rational(num);
}

Atom read_atom(AlgCursor& cur) {
    cur.skip_spaces();
    size_t at_pos = cur.pos;
    char c = cur.peek();
    ++cur.pos;
    if (c == 'z') {
        cur.expect('(');
        size_t k_pos = cur.pos;
        long k = cur.read_uint();
        cur.expect(')');
        if (k < 2) {
            cur.pos = k_pos;
            cur.fail("z(k) needs k >= 2");
        }
        return zeta_atom(static_cast<int>(k));
    }
    if (c == 'S') {
        cur.expect('(');
        size_t p_pos = cur.pos;
        long p = cur.read_uint();
        cur.expect(',');
        size_t q_pos = cur.pos;
        long q = cur.read_uint();
        cur.expect(')');
        if (p < 1) {
            cur.pos = p_pos;
            cur.fail("S(p,q) needs p >= 1");
        }
        if (q < 2) {
            cur.pos = q_pos;
            cur.fail("S(p,q) needs q >= 2");
        }
        return euler_atom(static_cast<int>(p), static_cast<int>(q));
    }
    if (c == 'm') {
        cur.expect('(');
        size_t inner_start = cur.pos;
        size_t close = cur.text.find(')', inner_start);
        if (close == std::string::npos) {
            cur.pos = cur.text.size();
            cur.fail("expected ')'");
        }
        Composition s;
        try {
            s = parse_composition(cur.text.substr(inner_start, close - inner_start));
        } catch (const parse_error& inner) {
            throw parse_error(inner.what(), inner_start + inner.position);
        }
        cur.pos = close + 1;
        if (!s.admissible()) {
            cur.pos = inner_start;
            cur.fail("m(s) needs an admissible index");
        }
        return mzv_atom(s);
    }
    cur.pos = at_pos;
    cur.fail("expected an atom or a coefficient");
}

} // namespace

AlgebraElement parse_algebra(const std::string& text) {
    AlgCursor cur{text};
    AlgebraElement out;
    cur.skip_spaces();
    if (cur.done()) cur.fail("empty expression");
    bool first_term = true;
    while (true) {
        cur.skip_spaces();
        Rational sign(1);
        if (cur.try_consume('-')) {
            sign = -1;
        } else if (cur.try_consume('+')) {
            if (first_term) cur.fail("unexpected '+'");
        } else if (!first_term) {
            cur.fail("expected '+' or '-'");
        }
        first_term = false;

        Rational coeff = sign;
        Monomial mono;
        bool want_factor = true;
        while (want_factor) {
            cur.skip_spaces();
            if (cur.done()) cur.fail("expected a factor");
            char c = cur.peek();
            if (c >= '0' && c <= '9') {
                coeff *= read_rational(cur);
            } else {
                Atom at = read_atom(cur);
                int e = 1;
                if (cur.try_consume('^')) {
                    size_t e_pos = cur.pos;
                    long ev = cur.read_uint(64);
                    if (ev < 1) {
                        cur.pos = e_pos;
                        cur.fail("exponent must be >= 1");
                    }
                    e = static_cast<int>(ev);
                }
                mono = mono_mul(mono, Monomial{{{at, e}}});
            }
            want_factor = cur.try_consume('*');
        }
        out.add_term(coeff, std::move(mono));

        cur.skip_spaces();
        if (cur.done()) break;
        if (cur.peek() != '+' && cur.peek() != '-') cur.fail("expected '+' or '-'");
    }
    return out;
}

} // namespace zetasum
