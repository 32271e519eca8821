#pragma once

// Divisor sums and the denominator machinery shared by the whole pipeline:
//
//   sigma_j(n) = sum_{d|n} d^j
//   gamma(n,l) = floor(2n / (l(l+1))),  zero once l(l+1) > 2n
//   Q_n(k)     = k^n * prod_{l>=1} (k+l)^gamma(n,l)
//   mu_j(n)    = sum_{l>=1} l^j gamma(n,l)        (j = 0,1,2)
//   M_n        = deg Q_n = n + mu_0(n)
//
// plus the q-series A_j(q) = sum n^j sigma(n) q^n, the B_1..B_3 combinations,
// the generating polynomials Cbar_n(q) of complete graphs, and the
// triple-product identity check on A_0.

#include <array>
#include <cstdint>
#include <vector>

#include "defexp/int_poly.hpp"

namespace defexp {

/// sigma_j(n): sum of j-th powers of the divisors of n (n >= 1).
BigInt sigma(long n, int j = 1);

/// sum_{j=1}^{n-1} sigma(j) sigma(n-j), by direct convolution (n >= 2).
BigInt convolution_sigma(long n);

/// Closed form (5 sigma_3(n) + (1-6n) sigma(n)) / 12 for the same sum.
/// Validated against convolution_sigma in the test suite before use.
BigInt convolution_sigma_closed(long n);

// Everything gamma/mu/Q/M for 1 <= n <= nmax, built once and then immutable.
class DenomTable {
public:
    explicit DenomTable(int nmax);

    int nmax() const { return nmax_; }
    long gamma(int n, int l) const; // 0 once l(l+1) > 2n
    const BigInt& mu(int j, int n) const;
    int M(int n) const;
    /// Q_n(k); Q_0 is the constant 1.
    const IntPoly& Q(int n) const;
    /// Q_n / (Q_j * Q_{n-j}), 1 <= j <= n-1 (exact by construction).
    const IntPoly& split_cofactor(int j, int n) const;

private:
    int nmax_;
    std::vector<std::vector<long>> gamma_;   // gamma_[n][l-1]
    std::vector<std::array<BigInt, 3>> mu_;  // mu_[n][j]
    std::vector<IntPoly> q_;                 // q_[n], q_[0] = 1
    std::vector<int> m_;                     // m_[n]
    std::vector<std::vector<IntPoly>> cof_;  // cof_[n][j-1], j <= n/2
};

/// Coefficients of A_j(q) = sum_{n>=1} n^j sigma(n) q^n through q^N
/// (index = power of q, entry 0 is 0).
std::vector<BigInt> a_series(int j, int N);

/// B_1 = A_0, B_2 = -A_1,
/// B_3 = -(1/10) A_0 + (3/5) A_1 + (1/2) A_2 - (13/10) A_0^2, through q^N.
std::vector<BigRat> b_series(int i, int N);

/// Cbar_1..Cbar_nmax (polynomials in q) via the binomial recurrence
/// Cbar_{n+1}(q) = q^{n(n+1)/2} - sum_{j=1}^{n} C(n,j) Cbar_{n+1-j}(q) q^{j(j-1)/2},
/// Cbar_1 = 1. Entry [n] is Cbar_n; entry [0] unused.
std::vector<IntPoly> cbar_polys(int nmax);

/// True iff A_0(q) = sum_{i>=1} (-1)^{i+1} [ i(i+1)(2i+1)/6 + (2i+1) A_0(q) ] q^{i(i+1)/2}
/// holds coefficient-wise for q^1..q^N (exact integer series arithmetic).
bool jacobi_identity_check(int N);

/// prod_{i>=1} (1-q^i)^3 truncated at q^N (for the identity's product side).
std::vector<BigInt> triple_product_cubed(int N);

} // namespace defexp
