#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zetasum/composition.hpp"
#include "zetasum/rational.hpp"

namespace zetasum {

// Formal atom of the closed-form algebra: z(k) is a Riemann zeta value with
// k >= 2, m(s) a multiple zeta value with admissible index of depth >= 2
// (depth-1 indices normalize to z), S(p,q) a linear Euler sum with q >= 2.
struct Atom {
    enum class Kind { Z, M, S };
    Kind kind = Kind::Z;
    int a = 0;         // Z: k; S: p
    int b = 0;         // S: q
    Composition comp;  // M index

    int weight() const;
    std::string str() const;

    bool operator==(const Atom& o) const;
    // Printed-form order; distinct atoms always print differently.
    bool operator<(const Atom& o) const { return str() < o.str(); }
};

Atom zeta_atom(int k);
Atom mzv_atom(const Composition& s);  // depth 1 normalizes to zeta_atom
Atom euler_atom(int p, int q);

// Commutative power product of atoms, kept sorted with exponents >= 1.
struct Monomial {
    std::vector<std::pair<Atom, int>> factors;

    bool is_empty() const { return factors.empty(); }
    int weight() const;
    std::string str() const;

    bool operator==(const Monomial& o) const { return factors == o.factors; }
    // Canonical term order: total weight, then printed form.
    bool operator<(const Monomial& o) const;
};

Monomial mono_mul(const Monomial& x, const Monomial& y);

// Q-linear combination of monomials; the zero element has no terms. Stored
// in canonical form: no zero coefficients, and every product of two
// even-index z atoms inside a monomial is rewritten as a rational multiple
// of the single even zeta of the combined weight (e.g. z(2)^2 -> 5/2*z(4)),
// matching how such products are always written in the source identities.
class AlgebraElement {
public:
    AlgebraElement() = default;

    static AlgebraElement constant(const Rational& c);
    static AlgebraElement from_atom(const Atom& a);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const { return coefficient(Monomial{}); }
    // True when every term has the same total weight (constants count only
    // if they are the sole term); reports that weight.
    bool homogeneous(int& weight_out) const;

    void add_term(const Rational& c, Monomial m);

    AlgebraElement operator-() const;
    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement& operator*=(const AlgebraElement& o);
    AlgebraElement operator*(const Rational& c) const;

    bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }

    std::string str() const;

private:
    std::map<Monomial, Rational> terms_;
};

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement scale(const Rational& c, const AlgebraElement& x);
AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y);

// Convenience single-atom elements.
AlgebraElement ael_zeta(int k);
AlgebraElement ael_mzv(const Composition& s);
AlgebraElement ael_euler(int p, int q);
AlgebraElement ael_const(const Rational& c);

// All 2^(depth-1) contractions of adjacent parts: the star value is the sum
// of the plain multiple zeta values over these indices. Requires admissible s.
std::vector<Composition> star_to_mzv(const Composition& s);

// Duality on admissible indices via the unique block decomposition into
// (m_i+2, {1}_{n_i}) blocks; an involution.
Composition duality(const Composition& s);

// Wire format: terms joined by '+'/'-', each "coeff*atom*atom^e*...";
// coefficient "a/b" omitted when 1. Examples: "3/4*z(8)",
// "-3/4*S(2,6)-z(2)*z(3)^2+5*z(3)*z(5)-385/192*z(8)", "m(6,1,1)", "0".
std::string format_algebra(const AlgebraElement& e);
AlgebraElement parse_algebra(const std::string& text);

} // namespace zetasum
