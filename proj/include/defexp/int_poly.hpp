#pragma once

// Dense univariate polynomials over arbitrary-precision integers, plus the
// exact scalar types everything else is built on. All arithmetic is exact;
// a division that must be exact throws NotDivisible if it is not.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "defexp/errors.hpp"

namespace defexp {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Reduced rational with positive denominator.
BigRat make_rat(BigInt num, BigInt den);

/// Number of decimal digits of |z| (0 for z = 0).
int decimal_digits(const BigInt& z);

// Coefficients stored in ascending powers; no trailing zeros, so the zero
// polynomial is the empty vector and degree() == coeffs.size()-1 otherwise.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(BigInt constant);
    explicit IntPoly(std::vector<BigInt> coeffs);
    IntPoly(std::initializer_list<long> ascending);

    static IntPoly monomial(BigInt coeff, int power);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for 0
    const BigInt& coeff(int i) const;                              // 0 outside range
    const BigInt& leading() const;                                 // requires nonzero
    const std::vector<BigInt>& coeffs() const { return c_; }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    IntPoly scaled(const BigInt& s) const;
    IntPoly times_power(int p) const; // * k^p

    BigInt eval(const BigInt& x) const;
    BigRat eval(const BigRat& x) const;
    /// Sign of the value at num/den (den > 0), without building the rational.
    int sign_at(const BigInt& num, const BigInt& den) const;

    IntPoly derivative() const;
    /// Coefficients of p(k+1).
    IntPoly shifted_by_one() const;

    /// gcd of all coefficients, positive (0 for the zero polynomial).
    BigInt content() const;
    /// Content removed, leading coefficient made positive.
    IntPoly primitive() const;

    std::string to_string(const std::string& var = "k") const;

private:
    void normalize();
    std::vector<BigInt> c_;
};

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);

/// Quotient q with a = q*b exactly; throws NotDivisible otherwise.
IntPoly poly_exact_div(const IntPoly& a, const IntPoly& b);

/// Pseudo-remainder of a by b scaled by a positive constant, so the sign of
/// the value at every point matches the true remainder's. Returns the zero
/// polynomial when b divides a.
IntPoly signed_pseudo_rem(const IntPoly& a, const IntPoly& b);

/// Primitive gcd with positive leading coefficient (content removed).
IntPoly poly_gcd(IntPoly a, IntPoly b);

/// p / gcd(p, p'): each irreducible factor once, multiplicities dropped.
IntPoly poly_squarefree(const IntPoly& p);

} // namespace defexp
