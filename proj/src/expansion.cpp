#include "defexp/expansion.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>

namespace defexp {

namespace {

IntPoly integral_div(const IntPoly& a, const IntPoly& b, const std::string& where) {
    try {
        return poly_exact_div(a, b);
    } catch (const NotDivisible&) {
        throw IntegralityViolation("inexact division in " + where);
    }
}

BigInt factorial(long n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

// All multisets {n_j >= 1 with multiplicity} of positive parts j with
// sum j*n_j = m and sum n_j <= max_parts. Callback gets (parts, total count).
void enumerate_compositions(int m, int max_parts,
                            const std::function<void(const std::map<int, int>&, int)>& f) {
    std::map<int, int> counts;
    std::function<void(int, int, int)> rec = [&](int remaining, int largest, int used) {
        if (remaining == 0) {
            f(counts, used);
            return;
        }
        if (used == max_parts) return;
        for (int j = std::min(remaining, largest); j >= 1; --j) {
            ++counts[j];
            rec(remaining - j, j, used + 1);
            if (--counts[j] == 0) counts.erase(j);
        }
    };
    rec(m, m, 0);
}

} // namespace

AlphaPair alpha_pair(int i) {
    AlphaPair a;
    a.i = i;
    a.pos_num = IntPoly(BigInt(1));
    a.neg_den = IntPoly(BigInt(1));
    for (long l = 1; l <= i; ++l) {
        a.pos_num = a.pos_num * IntPoly({-l, 1});
        a.neg_den = a.neg_den * IntPoly({l, 1});
    }
    return a;
}

QSeries fixed_point_step(const DenomTable& tab, const QSeries& w, int N) {
    QSeries r = QSeries::one(N);
    if (N < 1) return r;
    if (w.order < N - 1) throw std::invalid_argument("fixed_point_step: input order too low");

    const QSeries winv = series_recip(tab, series_truncate(w, N - 1), N - 1);
    QSeries wneg = winv;                                                        // w^-i
    QSeries wpos = series_mul(tab, series_truncate(w, N - 1), w, N - 1);        // w^(i+1)

    for (int i = 1;; ++i) {
        const int t = i * (i + 1) / 2;
        if (t > N) break;
        const int need = N - t;
        if (i > 1) {
            wneg = series_mul(tab, series_truncate(wneg, need), series_truncate(winv, need), need);
            wpos = series_mul(tab, series_truncate(wpos, need), series_truncate(w, need), need);
        }
        const AlphaPair al = alpha_pair(i);
        const int sign = (i % 2 == 0) ? 1 : -1;
        for (int n = t; n <= N; ++n) {
            const int m = n - t;
            // alpha_i(k) w^-i: numerator pos_num * num_m, denominator k^i Q_m.
            IntPoly hn = al.pos_num * wneg.num[m] *
                         integral_div(tab.Q(n), tab.Q(m).times_power(i), "fixed_point_step/h");
            // alpha_i(-k)^-1 w^(i+1): numerator k^i * num_m, denominator neg_den Q_m.
            IntPoly cap = wpos.num[m].times_power(i) *
                          integral_div(tab.Q(n), al.neg_den * tab.Q(m), "fixed_point_step/H");
            if (sign > 0)
                r.num[n] += hn - cap;
            else
                r.num[n] += cap - hn;
        }
    }
    return r;
}

PolyTable compute_table(const DenomTable& tab, int nmax) {
    if (nmax < 1 || nmax > tab.nmax())
        throw std::invalid_argument("compute_table: need 1 <= nmax <= table cap");
    QSeries w = QSeries::one(0);
    for (int m = 0; m < nmax; ++m) {
        const int target = std::min(m + 1, nmax);
        QSeries next = fixed_point_step(tab, w, target);
        for (int n = 1; n <= w.order; ++n)
            if (next.num[n] != w.num[n])
                throw StabilizationFailure("coefficient " + std::to_string(n) +
                                           " changed on iteration " + std::to_string(m + 1));
        w = std::move(next);
    }
    PolyTable t;
    t.nmax = nmax;
    t.provenance = Method::kFixedPoint;
    t.P.assign(nmax + 1, IntPoly());
    t.Phat.assign(nmax + 1, IntPoly());
    for (int n = 1; n <= nmax; ++n) t.P[n] = std::move(w.num[n]);
    fill_reciprocal(tab, t);
    return t;
}

void fill_reciprocal(const DenomTable& tab, PolyTable& t) {
    for (int n = 1; n <= t.nmax; ++n) {
        IntPoly acc;
        for (int j = 1; j < n; ++j)
            acc += t.Phat[j] * t.P[n - j] * tab.split_cofactor(j, n);
        t.Phat[n] = t.P[n] - acc;
    }
}

PolyTable compute_table_multinomial(const DenomTable& tab, int nmax) {
    if (nmax < 1 || nmax > tab.nmax())
        throw std::invalid_argument("compute_table_multinomial: need 1 <= nmax <= table cap");
    PolyTable t;
    t.nmax = nmax;
    t.provenance = Method::kMultinomial;
    t.P.assign(nmax + 1, IntPoly());
    t.Phat.assign(nmax + 1, IntPoly());
    t.P[1] = IntPoly(BigInt(1));
    t.Phat[1] = IntPoly(BigInt(1));

    for (int n = 2; n <= nmax; ++n) {
        IntPoly acc;
        for (int i = 1;; ++i) {
            const int tri = i * (i + 1) / 2;
            if (tri > n) break;
            const int m = n - tri;
            const AlphaPair al = alpha_pair(i);

            // (-1)^i alpha_i(k) [q^m] w^-i, multiplied out over Q_n.
            enumerate_compositions(m, i, [&](const std::map<int, int>& parts, int used) {
                const int n0 = i - used;
                BigInt coef = factorial(i);
                mpz_divexact(coef.get_mpz_t(), coef.get_mpz_t(), factorial(n0).get_mpz_t());
                IntPoly numer = al.pos_num;
                IntPoly den = IntPoly(BigInt(1)).times_power(i);
                for (auto [j, nj] : parts) {
                    mpz_divexact(coef.get_mpz_t(), coef.get_mpz_t(), factorial(nj).get_mpz_t());
                    for (int rep = 0; rep < nj; ++rep) {
                        numer = numer * t.Phat[j];
                        den = den * tab.Q(j);
                    }
                }
                if (n0 % 2 == 1) coef = -coef;
                acc += (numer * integral_div(tab.Q(n), den, "multinomial/h")).scaled(coef);
            });

            // (-1)^(i+1) alpha_i(-k)^-1 [q^m] w^(i+1), multiplied out over Q_n.
            enumerate_compositions(m, i + 1, [&](const std::map<int, int>& parts, int used) {
                const int n0 = i + 1 - used;
                BigInt coef = factorial(i + 1);
                mpz_divexact(coef.get_mpz_t(), coef.get_mpz_t(), factorial(n0).get_mpz_t());
                IntPoly numer = IntPoly(BigInt(1)).times_power(i);
                IntPoly den = al.neg_den;
                for (auto [j, nj] : parts) {
                    mpz_divexact(coef.get_mpz_t(), coef.get_mpz_t(), factorial(nj).get_mpz_t());
                    for (int rep = 0; rep < nj; ++rep) {
                        numer = numer * t.P[j];
                        den = den * tab.Q(j);
                    }
                }
                if (i % 2 == 0) coef = -coef;
                acc += (numer * integral_div(tab.Q(n), den, "multinomial/H")).scaled(coef);
            });
        }
        t.P[n] = std::move(acc);
        // Phat_n from the reciprocal recursion, available once P_n is fixed.
        IntPoly hat_acc;
        for (int j = 1; j < n; ++j)
            hat_acc += t.Phat[j] * t.P[n - j] * tab.split_cofactor(j, n);
        t.Phat[n] = t.P[n] - hat_acc;
    }
    return t;
}

std::vector<IntPoly> shifted_numerators(const std::vector<IntPoly>& polys) {
    std::vector<IntPoly> r(polys.size());
    for (size_t i = 0; i < polys.size(); ++i) r[i] = polys[i].shifted_by_one();
    return r;
}

QSeries table_series(const PolyTable& t, bool hat, int N) {
    if (N > t.nmax) throw std::invalid_argument("table_series: N above table nmax");
    QSeries s = QSeries::one(N);
    for (int n = 1; n <= N; ++n) s.num[n] = hat ? t.Phat[n] : t.P[n];
    return s;
}

} // namespace defexp
