#pragma once

#include <mpfr.h>
#include <string>
#include "zetasum/rational.hpp"

namespace zetasum {

// Configurable-precision real. `digits` is the declared budget of significant
// decimal digits; the underlying mpfr value carries 10 extra guard digits so
// cancellation in alternating-sign recurrences does not eat into the budget.
// Binary operations take the smaller budget of the two operands.
class HPReal {
public:
    HPReal();                     // NaN at the default 12-digit budget
    explicit HPReal(int digits);  // NaN at the given budget
    HPReal(const HPReal& o);
    HPReal(HPReal&& o) noexcept;
    HPReal& operator=(const HPReal& o);
    HPReal& operator=(HPReal&& o) noexcept;
    ~HPReal();

    static HPReal from_long(long v, int digits);
    static HPReal from_rational(const Rational& q, int digits);
    static HPReal from_string(const std::string& s, int digits);
    static HPReal zero(int digits) { return from_long(0, digits); }
    static HPReal one(int digits) { return from_long(1, digits); }
    static HPReal nan(int digits) { return HPReal(digits); }

    static mpfr_prec_t bits_for(int digits);

    int digits() const { return digits_; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    HPReal operator-() const;
    HPReal operator+(const HPReal& o) const;
    HPReal operator-(const HPReal& o) const;
    HPReal operator*(const HPReal& o) const;
    HPReal operator/(const HPReal& o) const;
    HPReal& operator+=(const HPReal& o);
    HPReal& operator-=(const HPReal& o);
    HPReal& operator*=(const HPReal& o);
    HPReal& operator/=(const HPReal& o);

    HPReal operator+(long v) const;
    HPReal operator-(long v) const;
    HPReal operator*(long v) const;
    HPReal operator/(long v) const;
    HPReal operator*(const Rational& q) const;
    HPReal operator/(const Rational& q) const;
    HPReal& operator*=(const Rational& q);
    HPReal& operator+=(const Rational& q);

    int compare(const HPReal& o) const { return mpfr_cmp(v_, o.v_); }
    bool operator<(const HPReal& o) const { return compare(o) < 0; }
    bool operator>(const HPReal& o) const { return compare(o) > 0; }
    bool operator==(const HPReal& o) const { return compare(o) == 0; }

    // Decimal string with `sig` significant digits (defaults to the budget).
    std::string str() const { return str(digits_); }
    std::string str(int sig) const;

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    friend HPReal ln(const HPReal& x);
    friend HPReal exp(const HPReal& x);
    friend HPReal abs(const HPReal& x);
    friend HPReal pow_si(const HPReal& x, long e);
    friend HPReal sqrt(const HPReal& x);

private:
    mpfr_t v_;
    int digits_;
};

HPReal ln(const HPReal& x);
HPReal exp(const HPReal& x);
HPReal abs(const HPReal& x);
HPReal pow_si(const HPReal& x, long e);
HPReal sqrt(const HPReal& x);

// Same value relabeled with a narrower digit budget; keeps the stored
// precision so guard digits survive. Only use to narrow after computing
// with headroom, never to claim more digits than were computed.
HPReal with_digits(const HPReal& x, int digits);

} // namespace zetasum
