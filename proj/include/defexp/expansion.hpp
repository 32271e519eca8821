#pragma once

// Expansion engine for the numerator polynomials P_n, Phat_n of the zero
// expansions x_k(q) = -k q^{1-k} w_k(q),  w_k = 1 + sum_n P_n(k)/Q_n(k) q^n,
// 1/w_k = 1 - sum_n Phat_n(k)/Q_n(k) q^n.
//
// Primary route: iterate the fixed point
//   w <- 1 + sum_{i>=1} (-1)^i [ alpha_i(k) w^{-i} - alpha_i(-k)^{-1} w^{i+1} ] q^{i(i+1)/2}
// with alpha_i(k) = (k-1)(k-2)...(k-i)/k^i, in the series class over the
// Q_n denominators; coefficient n is final from iteration n on, and that
// stabilization is asserted, not assumed.
//
// Independent oracle: the multinomial recursion obtained by extracting the
// q^n coefficient of the fixed-point equation directly, driven by the
// composition sets A(l,m) = { (n_0,n_1,...) : sum n_j = l, sum j*n_j = m }.
//
// Phat follows from P via the reciprocal recursion
//   Phat_n = P_n - Q_n * sum_{j=1}^{n-1} Phat_j P_{n-j} / (Q_j Q_{n-j}).

#include <vector>

#include "defexp/series_ring.hpp"

namespace defexp {

// alpha_i(k) as exact polynomial data: alpha_i(k) = pos_num / k^i and
// alpha_i(-k)^{-1} = k^i / neg_den. Not collapsed for i >= k: k stays an
// indeterminate, and (k-1)...(k-i) vanishes at the relevant integers anyway.
struct AlphaPair {
    int i = 0;
    IntPoly pos_num; // (k-1)(k-2)...(k-i)
    IntPoly neg_den; // (k+1)(k+2)...(k+i)
};

AlphaPair alpha_pair(int i);

enum class Method { kFixedPoint, kMultinomial };

struct PolyTable {
    int nmax = 0;
    std::vector<IntPoly> P;    // [1..nmax]
    std::vector<IntPoly> Phat; // [1..nmax]
    Method provenance = Method::kFixedPoint;
};

/// One fixed-point application, truncated at q^N (input must carry honest
/// coefficients through q^{N-1}).
QSeries fixed_point_step(const DenomTable& tab, const QSeries& w, int N);

/// P_1..P_nmax by the fixed-point iteration; throws StabilizationFailure if
/// any already-final coefficient changes on a later iteration.
PolyTable compute_table(const DenomTable& tab, int nmax);

/// Fill the Phat side from the P side (reciprocal recursion, all exact).
void fill_reciprocal(const DenomTable& tab, PolyTable& t);

/// Both families by the multinomial recursion (independent of
/// fixed_point_step / series_recip internals on the P side).
PolyTable compute_table_multinomial(const DenomTable& tab, int nmax);

/// Coefficients of p(k+1) for every table entry of the requested family.
std::vector<IntPoly> shifted_numerators(const std::vector<IntPoly>& polys);

/// The series w (numerators P_n over Q_n) as a QSeries, for identity checks.
QSeries table_series(const PolyTable& t, bool hat, int N);

} // namespace defexp
