#pragma once

// High-precision numeric side: evaluation of the deformed exponential
//   f(x;q) = sum_{n>=0} x^n q^{n(n-1)/2} / n!,
// its zeros x_k(q) = -k q^{1-k} w_k(q) (fixed point w = 1 + q F_k(w;q),
// polished by Newton on the rescaled series
//   g_k(w) = sum_{n>=0} (-1)^n (k^n/n!) w^n q^{(n-k)(n-k+1)/2},
// which keeps every term bounded by ~e^k and so avoids the q^{-k(k-1)/2}
// blow-up of evaluating f directly at x_k), residual checks of the zero
// identities, the Cbar power sums, and the disk-counting sums
//   G_k(u;t) = k! sum_{n>=0} u^{n-k} t^{(n-k)^2/2} / n!,
//   theta(t) = sum_{m in Z} t^{m^2/2}.

#include <vector>

#include "defexp/big_real.hpp"
#include "defexp/expansion.hpp"

namespace defexp {

/// Largest |q| for which the zero ordering/annulus structure is certified;
/// solves reject larger q unless allow_unproven is set.
inline const char* kProvenRegimeQ = "0.2";

/// f(x;q), |q| < 1. Truncates once terms fall below 10^-(digits+10) times
/// the running magnitude; throws PrecisionExhausted when cancellation has
/// consumed more than digits/2 decimal digits.
BigReal f_eval(const BigReal& x, const BigReal& q, int digits);

/// f(x;q) with the working precision auto-raised above the internal peak
/// magnitude, for residual measurements at zeros.
BigReal f_eval_absolute(const BigReal& x, const BigReal& q, int digits);

/// x_k(q) for k >= 1, 0 < q <= 0.2 (or any q in (0,1) with allow_unproven);
/// accurate to ~digits significant digits. Throws NoConvergence after 200
/// combined fixed-point/Newton steps; asserts the annulus ordering
/// (k-1) q^{-(2k-3)/2} < |x_k| < k q^{-(2k-1)/2} inside the proven regime.
BigReal solve_zero(const BigReal& q, int k, int digits, bool allow_unproven = false);

/// x_1..x_count (index 0 unused).
std::vector<BigReal> zero_set(const BigReal& q, int count, int digits,
                              bool allow_unproven = false);

struct IdentityResiduals {
    // index k = 1..kmax; entry 0 unused
    std::vector<BigReal> sum;   // | sum_j 1/(x_k - q x_j) |
    std::vector<BigReal> prod;  // relative residual of (q-1) x_k = prod_{j!=k} ...
    std::vector<BigReal> prime; // | x_k'(q) - (x_k^2/2) sum_j 1/(x_j - q x_k) |
};

/// Residuals of the three zero identities for k = 1..kmax, truncating the
/// j-sums/products at J zeros; the derivative uses a 5-point central
/// difference with step 10^-ceil(digits/3).
IdentityResiduals check_zero_identities(const BigReal& q, int J, int digits, int kmax = 3);

/// | -(n-1)! sum_{k<=J} x_k(q)^-n  -  Cbar_n(q) | for n = 1..nmax_c
/// (index 0 unused); q rational so the Cbar side is exact.
std::vector<BigReal> cbar_sum_residuals(const BigRat& q, int nmax_c, int J, int digits);

BigReal rouche_sum(int k, const BigReal& u, const BigReal& t, int digits);

BigReal theta_sum(const BigReal& t, int digits);

/// Exact truncated-series value -k q^{1-k} (1 + sum_{n<=N} P_n(k)/Q_n(k) q^n).
BigRat series_zero_estimate(const DenomTable& tab, const PolyTable& t, const BigRat& q, int k,
                            int N);

} // namespace defexp
