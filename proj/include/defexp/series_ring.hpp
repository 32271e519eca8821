#pragma once

// Truncated q-series with constant term 1 whose q^n coefficient is an
// integer-coefficient polynomial in k divided by Q_n(k). The denominator is
// kept literally Q_n — numerators are never reduced against it — so closure
// of the class under multiplication and reciprocal is a machine-checked
// invariant: every division below must be exact or IntegralityViolation
// is thrown.

#include <vector>

#include "defexp/numtheory.hpp"

namespace defexp {

struct QSeries {
    int order = 0;             // highest stored power of q
    std::vector<IntPoly> num;  // num[n] over Q_n; num[0] is the constant 1

    static QSeries one(int order);
    const IntPoly& coeff_num(int n) const { return num[n]; }
};

/// p * Q_n/Q_j (lift a numerator from denominator Q_j to Q_n, j <= n).
IntPoly lift_coeff(const DenomTable& tab, const IntPoly& p, int j, int n);

QSeries series_truncate(const QSeries& a, int N);

/// Cauchy product through q^N; every renormalizing division is exact.
QSeries series_mul(const DenomTable& tab, const QSeries& a, const QSeries& b, int N);

/// b with a*b = 1 through q^N (requires constant term 1).
QSeries series_recip(const DenomTable& tab, const QSeries& a, int N);

/// a^e for nonzero integer e (negative powers via the reciprocal).
QSeries series_pow(const DenomTable& tab, const QSeries& a, long e, int N);

} // namespace defexp
