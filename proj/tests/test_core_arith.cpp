#include "doctest.h"

#include <random>

#include "zetasum/constants.hpp"
#include "zetasum/errors.hpp"
#include "zetasum/hpreal.hpp"
#include "zetasum/rational.hpp"

using namespace zetasum;

namespace {

// Independent Bernoulli oracle: Akiyama-Tanigawa algorithm, exact rationals.
// Produces the B_1 = +1/2 variant; even indices coincide with ours.
Rational akiyama_tanigawa(unsigned long n) {
    std::vector<Rational> a(n + 1);
    for (unsigned long m = 0; m <= n; ++m) {
        a[m] = Rational(1, static_cast<unsigned long>(m + 1));
        for (unsigned long j = m; j >= 1; --j)
            a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
    }
    return a[0];
}

HPReal mpfr_pi(int digits) {
    HPReal r(digits);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

HPReal mpfr_gamma_reference(int digits) {
    HPReal r(digits);
    mpfr_const_euler(r.raw(), MPFR_RNDN);
    return r;
}

HPReal tol(int digits) {
    return HPReal::from_rational(Rational(1), 20) / pow_si(HPReal::from_long(10, 20), digits);
}

} // namespace

TEST_SUITE("rational") {

TEST_CASE("exact field laws on random values") {
    std::mt19937 rng(20260823);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    for (int t = 0; t < 200; ++t) {
        Rational a = rat(num(rng), den(rng));
        Rational b = rat(num(rng), den(rng));
        CHECK((a + b) - b == a);
        if (a != 0) CHECK(a * (Rational(1) / a) == 1);
    }
}

TEST_CASE("string round trips") {
    CHECK(rational_to_string(rat(-691, 2730)) == "-691/2730");
    CHECK(rational_to_string(Rational(7)) == "7");
    CHECK(rational_from_string("-691/2730") == rat(-691, 2730));
    CHECK(rational_from_string("7") == Rational(7));
    CHECK(rational_from_string("4/6") == rat(2, 3));
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-100000, 100000);
    std::uniform_int_distribution<long> den(1, 100000);
    for (int t = 0; t < 100; ++t) {
        Rational a = rat(num(rng), den(rng));
        CHECK(rational_from_string(rational_to_string(a)) == a);
    }
    CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("abc"), std::invalid_argument);
    CHECK_THROWS_AS(rat(1, 0), std::domain_error);
}

TEST_CASE("factorial binomial rising") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 7) == 0);
    CHECK(rising(Rational(3), 4) == 3 * 4 * 5 * 6);
    CHECK(rising(rat(1, 2), 2) == rat(3, 4));
    CHECK(rising(Rational(5), 0) == 1);
}

} // TEST_SUITE rational

TEST_SUITE("bernoulli") {

TEST_CASE("base cases and convention") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == rat(-1, 2));
    CHECK(bernoulli(2) == rat(1, 6));
}

TEST_CASE("matches independent Akiyama-Tanigawa computation") {
    for (unsigned long k = 2; k <= 30; k += 2)
        CHECK(bernoulli(k) == akiyama_tanigawa(k));
    CHECK(bernoulli(12) == akiyama_tanigawa(12));
}

TEST_CASE("odd indices beyond 1 vanish") {
    for (unsigned long k = 1; k <= 15; ++k)
        CHECK(bernoulli(2 * k + 1) == 0);
}

} // TEST_SUITE bernoulli

TEST_SUITE("hpreal") {

TEST_CASE("construction and printing") {
    HPReal x = HPReal::from_rational(rat(1, 3), 30);
    CHECK(x.str() == "0.333333333333333333333333333333");
    CHECK(x.str(5) == "0.33333");
    CHECK(HPReal::from_long(-2, 10).str(3) == "-2.00");
    CHECK(HPReal::zero(10).str(4) == "0.000");
    CHECK(HPReal::from_string("1.25e2", 10).str(4) == "125.0");
    CHECK(HPReal::from_string("0.0000000000012", 10).str(3) == "1.20e-12");
    CHECK(HPReal::nan(10).is_nan());
    CHECK_THROWS_AS(HPReal::from_string("bogus", 10), std::invalid_argument);
}

TEST_CASE("budget tracking never overstates") {
    HPReal a = HPReal::from_long(1, 30);
    HPReal b = HPReal::from_long(3, 15);
    CHECK((a / b).digits() == 15);
    CHECK((a + b).digits() == 15);
    HPReal narrowed = with_digits(a, 12);
    CHECK(narrowed.digits() == 12);
}

TEST_CASE("rational conversion is exact to budget") {
    Rational q = rat(-691, 2730);
    HPReal x = HPReal::from_rational(q, 40);
    HPReal back = x - HPReal::from_rational(q, 40);
    CHECK(abs(back) < tol(39));
}

TEST_CASE("elementary functions") {
    HPReal e1 = exp(HPReal::from_long(1, 30));
    CHECK(abs(ln(e1) - HPReal::from_long(1, 30)) < tol(28));
    CHECK(abs(pow_si(HPReal::from_long(2, 20), 10) - HPReal::from_long(1024, 20)) < tol(18));
    CHECK(abs(sqrt(HPReal::from_long(49, 20)) - HPReal::from_long(7, 20)) < tol(18));
}

} // TEST_SUITE hpreal

TEST_SUITE("euler_gamma") {

TEST_CASE("two-cutoff agreement is the oracle") {
    HPReal a = euler_gamma_with_cutoff(10, 60);
    HPReal b = euler_gamma_with_cutoff(10, 120);
    CHECK(abs(a - b) < tol(10));
    HPReal c = euler_gamma_with_cutoff(30, 80);
    HPReal d = euler_gamma_with_cutoff(30, 160);
    CHECK(abs(c - d) < tol(30));
}

TEST_CASE("printed values at small budgets") {
    CHECK(euler_gamma(10).str() == "0.5772156649");
    CHECK(euler_gamma(1).str() == "0.6");
}

TEST_CASE("agrees with the library constant") {
    CHECK(abs(euler_gamma(50) - mpfr_gamma_reference(60)) < tol(50));
}

TEST_CASE("budget ceiling") {
    CHECK_NOTHROW(euler_gamma(max_gamma_digits));
    CHECK_THROWS_AS(euler_gamma(max_gamma_digits + 1), precision_error);
}

} // TEST_SUITE euler_gamma

TEST_SUITE("riemann_zeta") {

TEST_CASE("zeta(2) against an independent pi routine") {
    HPReal pi = mpfr_pi(25);
    HPReal target = pi * pi / 6;
    CHECK(abs(riemann_zeta(2, 15) - target) < tol(15));
    CHECK(riemann_zeta(2, 15).str() == "1.64493406684823");
}

TEST_CASE("zeta(3) against direct summation with tail bound") {
    // sum_{n>N} n^-3 < N^-2/2, so N = 300000 pins 10 digits.
    const long N = 300000;
    HPReal direct = HPReal::zero(20);
    for (long n = 1; n <= N; ++n)
        direct += HPReal::from_long(1, 20) / pow_si(HPReal::from_long(n, 20), 3);
    HPReal z3 = riemann_zeta(3, 10);
    CHECK(abs(z3 - direct) < tol(10));
    CHECK(z3.str() == "1.202056903");
}

TEST_CASE("zeta(2)^2 = 5/2 zeta(4)") {
    int d = 30;
    HPReal z2 = riemann_zeta(2, d);
    HPReal rhs = riemann_zeta(4, d) * rat(5, 2);
    CHECK(abs(z2 * z2 - rhs) < tol(d - 2));
}

TEST_CASE("cutoff doubling stability") {
    for (int k : {2, 3, 7, 13}) {
        HPReal a = riemann_zeta_with_cutoff(k, 25, 60);
        HPReal b = riemann_zeta_with_cutoff(k, 25, 120);
        CHECK(abs(a - b) < tol(25));
    }
}

TEST_CASE("divergent arguments rejected") {
    CHECK_THROWS_AS(riemann_zeta(1, 10), divergence_error);
    CHECK_THROWS_AS(riemann_zeta(0, 10), divergence_error);
}

} // TEST_SUITE riemann_zeta
