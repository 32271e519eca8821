#pragma once

// Thin value-semantic wrapper over MPFR. Every value carries its own
// precision; binary operations compute at the larger of the two operand
// precisions. Precision is requested in decimal digits and converted to
// bits with headroom.

#include <mpfr.h>

#include <string>

#include "defexp/int_poly.hpp"

namespace defexp {

class BigReal {
public:
    static mpfr_prec_t bits_for_digits(int digits10);

    BigReal() : BigReal(64, 0L) {}
    explicit BigReal(mpfr_prec_t bits, long value = 0);
    BigReal(const std::string& decimal, int digits10);
    BigReal(const BigRat& x, int digits10);
    BigReal(const BigInt& x, int digits10);

    BigReal(const BigReal& o);
    BigReal(BigReal&& o) noexcept;
    BigReal& operator=(const BigReal& o);
    BigReal& operator=(BigReal&& o) noexcept;
    ~BigReal();

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    BigReal operator-() const;
    BigReal operator+(const BigReal& o) const;
    BigReal operator-(const BigReal& o) const;
    BigReal operator*(const BigReal& o) const;
    BigReal operator/(const BigReal& o) const;
    BigReal& operator+=(const BigReal& o);
    BigReal& operator-=(const BigReal& o);

    BigReal operator*(long s) const;
    BigReal operator/(long s) const;

    /// Exact three-way comparison against a rational.
    int cmp(const BigRat& x) const { return mpfr_cmp_q(v_, x.get_mpq_t()); }

    bool operator<(const BigReal& o) const { return mpfr_cmp(v_, o.v_) < 0; }
    bool operator>(const BigReal& o) const { return mpfr_cmp(v_, o.v_) > 0; }
    bool operator<=(const BigReal& o) const { return mpfr_cmp(v_, o.v_) <= 0; }
    bool operator>=(const BigReal& o) const { return mpfr_cmp(v_, o.v_) >= 0; }
    bool is_zero() const { return mpfr_zero_p(v_); }
    int sign() const { return mpfr_sgn(v_); }

    BigReal abs() const;
    BigReal sqrt() const;
    /// this^e for any integer e (exact binary powering at own precision).
    BigReal pow_int(long e) const;

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// log10 |x| as a double (-inf for 0); for magnitude estimates only.
    double log10_abs() const;
    /// Round-to-nearest decimal string with the given significant digits.
    std::string to_string(int digits10) const;

private:
    mpfr_t v_;
};

BigReal operator*(long s, const BigReal& x);

/// 10^-e at a precision suiting comparisons against it.
BigReal pow10(long e, int digits10);

} // namespace defexp
