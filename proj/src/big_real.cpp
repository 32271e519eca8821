#include "defexp/big_real.hpp"

#include <cmath>
#include <stdexcept>

namespace defexp {

mpfr_prec_t BigReal::bits_for_digits(int digits10) {
    if (digits10 < 1) throw std::invalid_argument("BigReal: digits10 must be >= 1");
    return static_cast<mpfr_prec_t>(std::ceil(digits10 * 3.3219280948873626)) + 16;
}

BigReal::BigReal(mpfr_prec_t bits, long value) {
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, value, MPFR_RNDN);
}

BigReal::BigReal(const std::string& decimal, int digits10) {
    mpfr_init2(v_, bits_for_digits(digits10));
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("BigReal: cannot parse '" + decimal + "'");
}

BigReal::BigReal(const BigRat& x, int digits10) {
    mpfr_init2(v_, bits_for_digits(digits10));
    mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(const BigInt& x, int digits10) {
    mpfr_init2(v_, bits_for_digits(digits10));
    mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN);
}

BigReal::BigReal(const BigReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& o) noexcept {
    mpfr_init2(v_, 64);
    mpfr_swap(v_, o.v_);
}

BigReal& BigReal::operator=(const BigReal& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

namespace {
mpfr_prec_t join(const BigReal& a, const BigReal& b) {
    return std::max(a.precision(), b.precision());
}
} // namespace

BigReal BigReal::operator-() const {
    BigReal r(precision());
    mpfr_neg(r.raw(), v_, MPFR_RNDN);
    return r;
}

#define DEFEXP_BIGREAL_BINOP(op, fn)                       \
    BigReal BigReal::operator op(const BigReal& o) const { \
        BigReal r(join(*this, o));                         \
        fn(r.raw(), v_, o.v_, MPFR_RNDN);                  \
        return r;                                          \
    }

DEFEXP_BIGREAL_BINOP(+, mpfr_add)
DEFEXP_BIGREAL_BINOP(-, mpfr_sub)
DEFEXP_BIGREAL_BINOP(*, mpfr_mul)
DEFEXP_BIGREAL_BINOP(/, mpfr_div)
#undef DEFEXP_BIGREAL_BINOP

BigReal& BigReal::operator+=(const BigReal& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator-=(const BigReal& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigReal BigReal::operator*(long s) const {
    BigReal r(precision());
    mpfr_mul_si(r.raw(), v_, s, MPFR_RNDN);
    return r;
}

BigReal BigReal::operator/(long s) const {
    BigReal r(precision());
    mpfr_div_si(r.raw(), v_, s, MPFR_RNDN);
    return r;
}

BigReal operator*(long s, const BigReal& x) { return x * s; }

BigReal BigReal::abs() const {
    BigReal r(precision());
    mpfr_abs(r.raw(), v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::sqrt() const {
    BigReal r(precision());
    mpfr_sqrt(r.raw(), v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::pow_int(long e) const {
    BigReal r(precision());
    mpfr_pow_si(r.raw(), v_, e, MPFR_RNDN);
    return r;
}

double BigReal::log10_abs() const {
    if (mpfr_zero_p(v_)) return -HUGE_VAL;
    mpfr_t t;
    mpfr_init2(t, 64);
    mpfr_abs(t, v_, MPFR_RNDN);
    mpfr_log10(t, t, MPFR_RNDN);
    double d = mpfr_get_d(t, MPFR_RNDN);
    mpfr_clear(t);
    return d;
}

std::string BigReal::to_string(int digits10) const {
    mpfr_exp_t exp = 0;
    char* s = mpfr_get_str(nullptr, &exp, 10, digits10, v_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string digits = neg ? mant.substr(1) : mant;
    std::string out = neg ? "-" : "";
    if (mpfr_zero_p(v_)) return "0";
    if (exp <= 0) {
        out += "0." + std::string(-exp, '0') + digits;
    } else if (static_cast<size_t>(exp) >= digits.size()) {
        out += digits + std::string(exp - digits.size(), '0');
    } else {
        out += digits.substr(0, exp) + "." + digits.substr(exp);
    }
    return out;
}

BigReal pow10(long e, int digits10) {
    BigReal r(BigReal::bits_for_digits(digits10));
    mpfr_set_si(r.raw(), 10, MPFR_RNDN);
    mpfr_pow_si(r.raw(), r.raw(), e, MPFR_RNDN);
    return r;
}

} // namespace defexp
