#include "zetasum/rational.hpp"

namespace zetasum {

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rational rising(const Rational& t, unsigned long k) {
    Rational r(1);
    Rational x = t;
    for (unsigned long i = 0; i < k; ++i) {
        r *= x;
        x += 1;
    }
    return r;
}

Integer int_pow(unsigned long base, unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

Rational inv_power(unsigned long base, unsigned long e) {
    Rational q(Integer(1), int_pow(base, e));
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

} // namespace zetasum
