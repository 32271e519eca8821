#pragma once

// Non-negativity certification for the computed polynomial families.
//
// Two upper bounds on the largest real root of P with positive leading
// coefficient:
//   lagrange_bound: sum of the two largest elements of
//       { (|a_{n-i}|/a_n)^(1/i) : a_{n-i} < 0 },
//   nonneg_tail_bound(r): with m the least index such that a_j >= 0 for all
//       j >= m, b(r) = sum_{j=m}^n a_j r^(j-m), c(r) = max_i (|a_{m-i}|/b(r))^(1/i),
//       the bound max{ r, 2 c(r) }.
// Radicals are covered by exact rational outward bounds (integer root
// extraction on a scaled value), never by floating point, so P(k) > 0 is
// certified for every integer k above the reported bound after an exact
// sweep of the finitely many k below it.

#include <optional>
#include <utility>
#include <vector>

#include "defexp/int_poly.hpp"

namespace defexp {

/// Exact rational u with u >= (a)^(1/i), within 10^-6 of it (a >= 0, i >= 1).
BigRat upper_root(const BigRat& a, int i);

BigRat lagrange_bound(const IntPoly& p);

BigRat nonneg_tail_bound(const IntPoly& p, const BigRat& r);

struct NonnegReport {
    int n = 0;
    bool hat = false;
    BigRat lagrange;
    std::vector<std::pair<BigRat, BigRat>> nu_r; // (r, bound)
    BigRat best;                                 // min over all bounds
    long sweep_limit = 1;                        // ceil(best), at least 1
    bool all_nonnegative = false;
    std::optional<long> first_negative_k;
    BigInt first_negative_value;
};

/// Certify p(k) >= 0 for all integers k >= 1 (or report the witness).
NonnegReport check_nonnegative(const IntPoly& p, const std::vector<BigRat>& r_grid);

struct SignMatrix {
    bool hat = false;
    bool shifted = false;
    std::vector<std::vector<int>> rows; // rows[n][i] in {-1,0,+1}; rows[0] unused
};

/// Signs of the coefficients (optionally of p(k+1)) for table entries 1..nmax.
SignMatrix sign_matrix(const std::vector<IntPoly>& polys, bool shifted);

/// Decimal digit counts of |coefficients|; 0 marks a zero coefficient.
std::vector<std::vector<int>> digits_matrix(const std::vector<IntPoly>& polys);

} // namespace defexp
