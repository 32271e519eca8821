#pragma once

// Exact real-root counting and isolation on the open interval (1, oo) via
// Sturm chains of the squarefree part, with rational bisection refinement
// down to a requested number of correct decimal digits. Roots at k = 1
// itself are excluded (the interval is open); the chain is built over
// integers with positive scaling factors only, so sign counts are exact.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "defexp/int_poly.hpp"

namespace defexp {

/// Sturm chain of a squarefree polynomial (content-stripped, signs kept).
std::vector<IntPoly> sturm_chain(const IntPoly& squarefree);

/// Sign variations of the chain at num/den (den > 0).
int sign_variations_at(const std::vector<IntPoly>& chain, const BigInt& num, const BigInt& den);

/// Sign variations at +infinity (leading coefficients).
int sign_variations_at_infinity(const std::vector<IntPoly>& chain);

/// Number of distinct real roots of p in (1, oo).
int sturm_count_above_one(const IntPoly& p);

struct RootCertificate {
    int n = 0;
    bool hat = false;
    int count = 0;
    std::vector<std::pair<BigRat, BigRat>> intervals; // each isolates one root
    std::vector<std::string> decimals;                // refined values, same order
};

/// Isolating intervals (lo, hi) in (1, oo), each with exactly one root of
/// the squarefree part and p(lo) p(hi) < 0; refined to `digits` decimals.
RootCertificate isolate_roots_above_one(const IntPoly& p, int digits = 18);

/// `digits` correct decimals of the unique root of p in (lo, hi).
std::string refine_root(const IntPoly& p, const BigRat& lo, const BigRat& hi, int digits);

/// Decimal expansion of the rightmost root in (1, oo), if any.
std::optional<std::string> largest_root_above_one(const IntPoly& p, int digits = 18);

/// Truncated decimal expansion of a nonnegative rational (digits after the point).
std::string decimal_floor_string(const BigRat& x, int digits);

} // namespace defexp
