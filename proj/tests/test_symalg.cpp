#include "doctest.h"

#include <random>

#include "zetasum/algebra.hpp"
#include "zetasum/errors.hpp"

using namespace zetasum;

namespace {

Atom random_atom(std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, 6);
    switch (pick(rng)) {
        case 0: return zeta_atom(2);
        case 1: return zeta_atom(3);
        case 2: return zeta_atom(5);
        case 3: return mzv_atom(Composition{2, 1});
        case 4: return mzv_atom(Composition{3, 1});
        case 5: return euler_atom(2, 6);
        default: return euler_atom(1, 2);
    }
}

AlgebraElement random_element(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 3), coef(-5, 5), natoms(0, 2), expo(1, 2);
    AlgebraElement e;
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        Monomial m;
        int na = natoms(rng);
        for (int j = 0; j < na; ++j)
            m = mono_mul(m, Monomial{{{random_atom(rng), expo(rng)}}});
        e.add_term(Rational(coef(rng)), m);
    }
    return e;
}

Composition random_admissible(std::mt19937& rng, int max_weight) {
    std::uniform_int_distribution<int> first(2, 4), next(1, 3), more(0, 1);
    Composition s{first(rng)};
    while (s.weight() < max_weight && more(rng)) {
        int p = next(rng);
        if (s.weight() + p > max_weight) break;
        s.parts.push_back(p);
    }
    return s;
}

} // namespace

TEST_SUITE("atoms") {

TEST_CASE("weights and normalization") {
    CHECK(zeta_atom(8).weight() == 8);
    CHECK(mzv_atom(Composition{6, 1, 1}).weight() == 8);
    CHECK(euler_atom(2, 6).weight() == 8);
    Atom normalized = mzv_atom(Composition{3});
    CHECK(normalized.kind == Atom::Kind::Z);
    CHECK(normalized.a == 3);
    CHECK(normalized.str() == "z(3)");
    CHECK(mzv_atom(Composition{6, 1, 1}).str() == "m(6,1,1)");
    CHECK(euler_atom(2, 6).str() == "S(2,6)");
}

TEST_CASE("constructor guards") {
    CHECK_THROWS_AS(zeta_atom(1), std::domain_error);
    CHECK_THROWS_AS(mzv_atom(Composition{1, 2}), std::domain_error);
    CHECK_THROWS_AS(euler_atom(0, 3), std::domain_error);
    CHECK_THROWS_AS(euler_atom(2, 1), std::domain_error);
}

} // TEST_SUITE atoms

TEST_SUITE("ring") {

TEST_CASE("monomial product and additive inverse") {
    AlgebraElement z2 = ael_zeta(2), z3 = ael_zeta(3);
    AlgebraElement prod = mul(z2, z3);
    CHECK(prod.terms().size() == 1);
    Monomial expected = mono_mul(Monomial{{{zeta_atom(2), 1}}}, Monomial{{{zeta_atom(3), 1}}});
    CHECK(prod.coefficient(expected) == 1);

    AlgebraElement any = z2 * rat(7, 3) + z3;
    CHECK(add(any, scale(Rational(-1), any)).is_zero());
}

TEST_CASE("weight grading under products") {
    AlgebraElement w3 = ael_zeta(3) * rat(2, 5);
    AlgebraElement w5 = ael_zeta(5) + ael_mzv(Composition{3, 2}) * rat(-7, 2);
    int w = 0;
    CHECK(w3.homogeneous(w));
    CHECK(w == 3);
    CHECK(w5.homogeneous(w));
    CHECK(w == 5);
    AlgebraElement prod = w3 * w5;
    CHECK(prod.homogeneous(w));
    CHECK(w == 8);
}

TEST_CASE("ring axioms on fuzzed elements") {
    std::mt19937 rng(2024);
    for (int t = 0; t < 60; ++t) {
        AlgebraElement a = random_element(rng);
        AlgebraElement b = random_element(rng);
        AlgebraElement c = random_element(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("products of even zetas fold into one even zeta") {
    CHECK(parse_algebra("z(2)^2") == parse_algebra("5/2*z(4)"));
    CHECK(parse_algebra("z(2)*z(4)") == parse_algebra("7/4*z(6)"));
    CHECK(parse_algebra("z(2)^3") == parse_algebra("35/8*z(6)"));
    CHECK(parse_algebra("z(4)^2") == parse_algebra("7/6*z(8)"));
    CHECK(parse_algebra("z(2)*z(6)") == parse_algebra("5/3*z(8)"));
    CHECK(parse_algebra("z(3)*z(2)*z(4)") == parse_algebra("7/4*z(3)*z(6)"));
    // Odd factors and non-zeta atoms are untouched.
    CHECK(format_algebra(parse_algebra("z(3)^2")) == "z(3)^2");
    CHECK(format_algebra(parse_algebra("z(2)*z(3)")) == "z(2)*z(3)");
}

} // TEST_SUITE ring

TEST_SUITE("star_expansion") {

TEST_CASE("stated expansions") {
    auto d2 = star_to_mzv(Composition{2, 1});
    REQUIRE(d2.size() == 2);
    CHECK(d2[0] == (Composition{2, 1}));
    CHECK(d2[1] == (Composition{3}));

    auto d1 = star_to_mzv(Composition{2});
    REQUIRE(d1.size() == 1);
    CHECK(d1[0] == (Composition{2}));

    auto d3 = star_to_mzv(Composition{2, 1, 1});
    REQUIRE(d3.size() == 4);
    CHECK(d3[0] == (Composition{2, 1, 1}));
    CHECK(d3[1] == (Composition{3, 1}));
    CHECK(d3[2] == (Composition{2, 2}));
    CHECK(d3[3] == (Composition{4}));
}

TEST_CASE("count, admissibility, weight preservation") {
    std::mt19937 rng(5);
    for (int t = 0; t < 50; ++t) {
        Composition s = random_admissible(rng, 12);
        auto parts = star_to_mzv(s);
        CHECK(parts.size() == (1u << (s.depth() - 1)));
        for (const auto& c : parts) {
            CHECK(c.admissible());
            CHECK(c.weight() == s.weight());
        }
    }
    CHECK_THROWS_AS(star_to_mzv(Composition{1, 2}), std::domain_error);
}

} // TEST_SUITE star_expansion

TEST_SUITE("duality") {

TEST_CASE("stated pairs") {
    CHECK(duality(Composition{3, 1}) == (Composition{3, 1}));
    CHECK(duality(Composition{2, 1}) == (Composition{3}));
    CHECK(duality(Composition{3}) == (Composition{2, 1}));
    CHECK(duality(Composition{5, 3, 1, 1}) == (Composition{4, 1, 2, 1, 1, 1}));
    CHECK(duality(Composition{4, 1, 2, 1, 1, 1}) == (Composition{5, 3, 1, 1}));
    CHECK(duality(Composition{2}) == (Composition{2}));
}

TEST_CASE("involution and weight preservation") {
    std::mt19937 rng(6);
    for (int t = 0; t < 80; ++t) {
        Composition s = random_admissible(rng, 12);
        Composition d = duality(s);
        CHECK(d.admissible());
        CHECK(d.weight() == s.weight());
        CHECK(duality(d) == s);
    }
    CHECK_THROWS_AS(duality(Composition{1, 3}), std::domain_error);
}

} // TEST_SUITE duality

TEST_SUITE("algebra_text") {

TEST_CASE("simple round trips") {
    CHECK(format_algebra(parse_algebra("3/4*z(8)")) == "3/4*z(8)");
    CHECK(format_algebra(parse_algebra("m(6,1,1)")) == "m(6,1,1)");
    CHECK(format_algebra(parse_algebra("7/4")) == "7/4");
    CHECK(format_algebra(parse_algebra("-z(2)")) == "-z(2)");
    CHECK(format_algebra(AlgebraElement{}) == "0");
    CHECK(format_algebra(parse_algebra("0")) == "0");
    CHECK(format_algebra(parse_algebra("2*3/4*z(8)")) == "3/2*z(8)");
    CHECK(format_algebra(parse_algebra("m(3)")) == "z(3)");
}

TEST_CASE("closed-form sized expression") {
    AlgebraElement e = parse_algebra("-385/192*z(8)+5*z(3)*z(5)-z(2)*z(3)^2-3/4*S(2,6)");
    AlgebraElement byhand;
    byhand += ael_zeta(8) * rat(-385, 192);
    byhand += ael_zeta(3) * ael_zeta(5) * Rational(5);
    byhand -= ael_zeta(2) * ael_zeta(3) * ael_zeta(3);
    byhand -= ael_euler(2, 6) * rat(3, 4);
    CHECK(e == byhand);
    int w = 0;
    CHECK(e.homogeneous(w));
    CHECK(w == 8);
    CHECK(format_algebra(e) == "-3/4*S(2,6)-z(2)*z(3)^2+5*z(3)*z(5)-385/192*z(8)");
}

TEST_CASE("terms order by weight then printed form") {
    AlgebraElement e = parse_algebra("z(5)+z(2)+m(2,1)+1/2");
    CHECK(format_algebra(e) == "1/2+z(2)+m(2,1)+z(5)");
}

TEST_CASE("round trip on fuzzed elements") {
    std::mt19937 rng(99);
    for (int t = 0; t < 120; ++t) {
        AlgebraElement e = random_element(rng);
        std::string text = format_algebra(e);
        if (e.is_zero()) {
            CHECK(text == "0");
            continue;
        }
        CHECK(parse_algebra(text) == e);
        CHECK(format_algebra(parse_algebra(text)) == text);
    }
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_algebra(""), parse_error);
    CHECK_THROWS_AS(parse_algebra("z(1)"), parse_error);
    CHECK_THROWS_AS(parse_algebra("m(1,2)"), parse_error);
    CHECK_THROWS_AS(parse_algebra("S(2,1)"), parse_error);
    CHECK_THROWS_AS(parse_algebra("3//4"), parse_error);
    CHECK_THROWS_AS(parse_algebra("z(2)+"), parse_error);
    CHECK_THROWS_AS(parse_algebra("z(2)^0"), parse_error);
    CHECK_THROWS_AS(parse_algebra("q(2)"), parse_error);
    try {
        parse_algebra("z(2)*w(3)");
    } catch (const parse_error& e) {
        CHECK(e.position == 5);
    }
}

} // TEST_SUITE algebra_text
