#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace zetasum {

// Exact arbitrary-precision rational, always in lowest terms with positive
// denominator (mpq_class canonicalizes on construction and arithmetic).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);
// Rising factorial t(t+1)...(t+k-1) for rational t.
Rational rising(const Rational& t, unsigned long k);

Integer int_pow(unsigned long base, unsigned long e);
// base^-e as an exact rational (base > 0).
Rational inv_power(unsigned long base, unsigned long e);

// Wire format "num/den" ("-691/2730"); integers may omit "/den".
std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& text);

} // namespace zetasum
