#include "defexp/series_ring.hpp"

#include <stdexcept>
#include <string>

namespace defexp {

namespace {
IntPoly integral_div(const IntPoly& a, const IntPoly& b, const char* where) {
    try {
        return poly_exact_div(a, b);
    } catch (const NotDivisible&) {
        throw IntegralityViolation(std::string("inexact division in ") + where);
    }
}
} // namespace

QSeries QSeries::one(int order) {
    QSeries s;
    s.order = order;
    s.num.assign(order + 1, IntPoly());
    s.num[0] = IntPoly(BigInt(1));
    return s;
}

IntPoly lift_coeff(const DenomTable& tab, const IntPoly& p, int j, int n) {
    if (j < 1 || j > n) throw std::invalid_argument("lift_coeff: need 1 <= j <= n");
    if (j == n) return p;
    return p * integral_div(tab.Q(n), tab.Q(j), "lift_coeff");
}

QSeries series_truncate(const QSeries& a, int N) {
    QSeries r;
    r.order = N;
    r.num.assign(N + 1, IntPoly());
    for (int n = 0; n <= N && n <= a.order; ++n) r.num[n] = a.num[n];
    return r;
}

QSeries series_mul(const DenomTable& tab, const QSeries& a, const QSeries& b, int N) {
    if (a.order < N || b.order < N)
        throw std::invalid_argument("series_mul: inputs truncated below N");
    QSeries r = QSeries::one(N);
    for (int n = 1; n <= N; ++n) {
        IntPoly acc = a.num[n] + b.num[n];
        for (int j = 1; j < n; ++j) {
            if (a.num[j].is_zero() || b.num[n - j].is_zero()) continue;
            acc += a.num[j] * b.num[n - j] * tab.split_cofactor(j, n);
        }
        r.num[n] = std::move(acc);
    }
    return r;
}

QSeries series_recip(const DenomTable& tab, const QSeries& a, int N) {
    if (a.order < N) throw std::invalid_argument("series_recip: input truncated below N");
    QSeries r = QSeries::one(N);
    for (int n = 1; n <= N; ++n) {
        IntPoly acc = a.num[n];
        for (int j = 1; j < n; ++j) {
            if (a.num[j].is_zero() || r.num[n - j].is_zero()) continue;
            acc += a.num[j] * r.num[n - j] * tab.split_cofactor(j, n);
        }
        r.num[n] = -acc;
    }
    return r;
}

QSeries series_pow(const DenomTable& tab, const QSeries& a, long e, int N) {
    if (e == 0) throw std::invalid_argument("series_pow: exponent must be nonzero");
    QSeries base = e > 0 ? series_truncate(a, N) : series_recip(tab, a, N);
    long m = e > 0 ? e : -e;
    QSeries r = base;
    for (long i = 1; i < m; ++i) r = series_mul(tab, r, base, N);
    return r;
}

} // namespace defexp
