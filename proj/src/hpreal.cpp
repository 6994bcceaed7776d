#include "zetasum/hpreal.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

namespace zetasum {

namespace {
constexpr int kGuardDigits = 10;
constexpr double kLog2Of10 = 3.321928094887362;
} // namespace

mpfr_prec_t HPReal::bits_for(int digits) {
    if (digits < 1) digits = 1;
    return static_cast<mpfr_prec_t>(std::ceil((digits + kGuardDigits) * kLog2Of10)) + 4;
}

HPReal::HPReal() : digits_(12) { mpfr_init2(v_, bits_for(digits_)); }

HPReal::HPReal(int digits) : digits_(std::max(digits, 1)) {
    mpfr_init2(v_, bits_for(digits_));
}

HPReal::HPReal(const HPReal& o) : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

HPReal::HPReal(HPReal&& o) noexcept : digits_(o.digits_) {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

HPReal& HPReal::operator=(const HPReal& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
        digits_ = o.digits_;
    }
    return *this;
}

HPReal& HPReal::operator=(HPReal&& o) noexcept {
    if (this != &o) {
        mpfr_swap(v_, o.v_);
        digits_ = o.digits_;
    }
    return *this;
}

HPReal::~HPReal() { mpfr_clear(v_); }

HPReal HPReal::from_long(long v, int digits) {
    HPReal r(digits);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

HPReal HPReal::from_rational(const Rational& q, int digits) {
    HPReal r(digits);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

HPReal HPReal::from_string(const std::string& s, int digits) {
    HPReal r(digits);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("bad real literal: " + s);
    return r;
}

namespace {
// Result carries the smaller digit budget; computed at the larger precision.
HPReal result_for(const HPReal& a, const HPReal& b) {
    HPReal r(std::min(a.digits(), b.digits()));
    mpfr_prec_t p = std::max(mpfr_get_prec(a.raw()), mpfr_get_prec(b.raw()));
    mpfr_set_prec(r.raw(), p);
    return r;
}
} // namespace

HPReal HPReal::operator-() const {
    HPReal r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

HPReal HPReal::operator+(const HPReal& o) const {
    HPReal r = result_for(*this, o);
    mpfr_add(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

HPReal HPReal::operator-(const HPReal& o) const {
    HPReal r = result_for(*this, o);
    mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

HPReal HPReal::operator*(const HPReal& o) const {
    HPReal r = result_for(*this, o);
    mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

HPReal HPReal::operator/(const HPReal& o) const {
    HPReal r = result_for(*this, o);
    mpfr_div(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

HPReal& HPReal::operator+=(const HPReal& o) {
    digits_ = std::min(digits_, o.digits_);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

HPReal& HPReal::operator-=(const HPReal& o) {
    digits_ = std::min(digits_, o.digits_);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

HPReal& HPReal::operator*=(const HPReal& o) {
    digits_ = std::min(digits_, o.digits_);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

HPReal& HPReal::operator/=(const HPReal& o) {
    digits_ = std::min(digits_, o.digits_);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

HPReal HPReal::operator+(long v) const {
    HPReal r(*this);
    mpfr_add_si(r.v_, v_, v, MPFR_RNDN);
    return r;
}

HPReal HPReal::operator-(long v) const {
    HPReal r(*this);
    mpfr_sub_si(r.v_, v_, v, MPFR_RNDN);
    return r;
}

HPReal HPReal::operator*(long v) const {
    HPReal r(*this);
    mpfr_mul_si(r.v_, v_, v, MPFR_RNDN);
    return r;
}

HPReal HPReal::operator/(long v) const {
    HPReal r(*this);
    mpfr_div_si(r.v_, v_, v, MPFR_RNDN);
    return r;
}

HPReal HPReal::operator*(const Rational& q) const {
    HPReal r(*this);
    mpfr_mul_q(r.v_, v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

HPReal HPReal::operator/(const Rational& q) const {
    HPReal r(*this);
    mpfr_div_q(r.v_, v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

HPReal& HPReal::operator*=(const Rational& q) {
    mpfr_mul_q(v_, v_, q.get_mpq_t(), MPFR_RNDN);
    return *this;
}

HPReal& HPReal::operator+=(const Rational& q) {
    mpfr_add_q(v_, v_, q.get_mpq_t(), MPFR_RNDN);
    return *this;
}

std::string HPReal::str(int sig) const {
    if (sig < 1) sig = 1;
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    if (mpfr_zero_p(v_)) return sig > 1 ? "0." + std::string(sig - 1, '0') : "0";

    mpfr_exp_t e;
    char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(sig), v_, MPFR_RNDN);
    std::string digits(raw);
    mpfr_free_str(raw);

    bool neg = !digits.empty() && digits[0] == '-';
    if (neg) digits.erase(0, 1);
    // mpfr can round 999.. up to a longer string; renormalize.
    if (static_cast<int>(digits.size()) > sig) {
        digits.resize(static_cast<size_t>(sig));
        ++e;
    }

    std::string out;
    if (e >= 1 && e <= sig) {
        out = digits.substr(0, static_cast<size_t>(e));
        if (e < sig) out += "." + digits.substr(static_cast<size_t>(e));
    } else if (e <= 0 && e > -5) {
        out = "0." + std::string(static_cast<size_t>(-e), '0') + digits;
    } else {
        out = digits.substr(0, 1);
        if (sig > 1) out += "." + digits.substr(1);
        out += "e" + std::to_string(e - 1);
    }
    return neg ? "-" + out : out;
}

HPReal ln(const HPReal& x) {
    HPReal r(x);
    mpfr_log(r.v_, x.v_, MPFR_RNDN);
    return r;
}

HPReal exp(const HPReal& x) {
    HPReal r(x);
    mpfr_exp(r.v_, x.v_, MPFR_RNDN);
    return r;
}

HPReal abs(const HPReal& x) {
    HPReal r(x);
    mpfr_abs(r.v_, x.v_, MPFR_RNDN);
    return r;
}

HPReal pow_si(const HPReal& x, long e) {
    HPReal r(x);
    mpfr_pow_si(r.v_, x.v_, e, MPFR_RNDN);
    return r;
}

HPReal sqrt(const HPReal& x) {
    HPReal r(x);
    mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
    return r;
}

HPReal with_digits(const HPReal& x, int digits) {
    HPReal r(digits);
    mpfr_set_prec(r.raw(), std::max(mpfr_get_prec(x.raw()), HPReal::bits_for(digits)));
    mpfr_set(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

} // namespace zetasum
