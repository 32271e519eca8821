#include "defexp/numtheory.hpp"

#include <array>
#include <stdexcept>

namespace defexp {

BigInt sigma(long n, int j) {
    if (n < 1) throw std::invalid_argument("sigma: n must be >= 1");
    BigInt s = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        BigInt dp, ep;
        mpz_ui_pow_ui(dp.get_mpz_t(), d, j);
        s += dp;
        long e = n / d;
        if (e != d) {
            mpz_ui_pow_ui(ep.get_mpz_t(), e, j);
            s += ep;
        }
    }
    return s;
}

BigInt convolution_sigma(long n) {
    if (n < 2) throw std::invalid_argument("convolution_sigma: n must be >= 2");
    BigInt s = 0;
    for (long j = 1; j < n; ++j) s += sigma(j) * sigma(n - j);
    return s;
}

BigInt convolution_sigma_closed(long n) {
    BigInt v = 5 * sigma(n, 3) + (1 - 6 * BigInt(n)) * sigma(n, 1);
    BigInt r;
    mpz_divexact_ui(r.get_mpz_t(), v.get_mpz_t(), 12);
    return r;
}

DenomTable::DenomTable(int nmax) : nmax_(nmax) {
    if (nmax < 1) throw std::invalid_argument("DenomTable: nmax must be >= 1");
    gamma_.resize(nmax + 1);
    mu_.resize(nmax + 1);
    q_.resize(nmax + 1);
    m_.resize(nmax + 1, 0);
    q_[0] = IntPoly(BigInt(1));
    for (int n = 1; n <= nmax; ++n) {
        std::vector<long>& g = gamma_[n];
        for (long l = 1; l * (l + 1) <= 2 * n; ++l) g.push_back(2L * n / (l * (l + 1)));
        mu_[n] = {BigInt(0), BigInt(0), BigInt(0)};
        IntPoly q = IntPoly(BigInt(1)).times_power(n);
        for (size_t idx = 0; idx < g.size(); ++idx) {
            long l = static_cast<long>(idx) + 1;
            mu_[n][0] += g[idx];
            mu_[n][1] += l * BigInt(g[idx]);
            mu_[n][2] += l * l * BigInt(g[idx]);
            IntPoly lin({l, 1});
            for (long e = 0; e < g[idx]; ++e) q = q * lin;
        }
        m_[n] = n + static_cast<int>(mu_[n][0].get_si());
        q_[n] = std::move(q);
    }
    cof_.resize(nmax + 1);
    for (int n = 2; n <= nmax; ++n) {
        cof_[n].resize(n / 2);
        for (int j = 1; j <= n / 2; ++j)
            cof_[n][j - 1] = poly_exact_div(q_[n], q_[j] * q_[n - j]);
    }
}

long DenomTable::gamma(int n, int l) const {
    const auto& g = gamma_[n];
    if (l < 1 || l > static_cast<int>(g.size())) return 0;
    return g[l - 1];
}

const BigInt& DenomTable::mu(int j, int n) const { return mu_[n][j]; }

int DenomTable::M(int n) const { return m_[n]; }

const IntPoly& DenomTable::Q(int n) const { return q_[n]; }

const IntPoly& DenomTable::split_cofactor(int j, int n) const {
    if (j > n - j) j = n - j;
    return cof_[n][j - 1];
}

std::vector<BigInt> a_series(int j, int N) {
    if (N < 1) throw std::invalid_argument("a_series: N must be >= 1");
    std::vector<BigInt> a(N + 1, BigInt(0));
    for (long n = 1; n <= N; ++n) {
        BigInt np;
        mpz_ui_pow_ui(np.get_mpz_t(), n, j);
        a[n] = np * sigma(n);
    }
    return a;
}

std::vector<BigRat> b_series(int i, int N) {
    std::vector<BigRat> b(N + 1, BigRat(0));
    auto a0 = a_series(0, N);
    switch (i) {
        case 1:
            for (int n = 1; n <= N; ++n) b[n] = BigRat(a0[n]);
            return b;
        case 2: {
            auto a1 = a_series(1, N);
            for (int n = 1; n <= N; ++n) b[n] = BigRat(-a1[n]);
            return b;
        }
        case 3: {
            auto a1 = a_series(1, N);
            auto a2 = a_series(2, N);
            std::vector<BigInt> a0sq(N + 1, BigInt(0));
            for (int u = 1; u <= N; ++u)
                for (int v = 1; u + v <= N; ++v) a0sq[u + v] += a0[u] * a0[v];
            for (int n = 1; n <= N; ++n)
                b[n] = make_rat(-a0[n], 10) + make_rat(3 * a1[n], 5) + make_rat(a2[n], 2) +
                       make_rat(-13 * a0sq[n], 10);
            return b;
        }
        default:
            throw std::invalid_argument("b_series: i must be 1, 2 or 3");
    }
}

std::vector<IntPoly> cbar_polys(int nmax) {
    if (nmax < 1) throw std::invalid_argument("cbar_polys: nmax must be >= 1");
    std::vector<IntPoly> c(nmax + 1);
    c[1] = IntPoly(BigInt(1));
    for (int n = 1; n + 1 <= nmax; ++n) {
        IntPoly next = IntPoly(BigInt(1)).times_power(n * (n + 1) / 2);
        for (int j = 1; j <= n; ++j) {
            BigInt binom;
            mpz_bin_uiui(binom.get_mpz_t(), n, j);
            next -= c[n + 1 - j].scaled(binom).times_power(j * (j - 1) / 2);
        }
        c[n + 1] = std::move(next);
    }
    return c;
}

bool jacobi_identity_check(int N) {
    auto a0 = a_series(0, N);
    std::vector<BigInt> rhs(N + 1, BigInt(0));
    for (long i = 1; i * (i + 1) / 2 <= N; ++i) {
        long t = i * (i + 1) / 2;
        int s = (i % 2 == 1) ? 1 : -1;
        BigInt c = BigInt(i) * (i + 1) * (2 * i + 1) / 6;
        rhs[t] += s * c;
        for (long n = 1; n + t <= N; ++n) rhs[n + t] += s * (2 * i + 1) * a0[n];
    }
    for (int n = 1; n <= N; ++n)
        if (a0[n] != rhs[n]) return false;
    return true;
}

std::vector<BigInt> triple_product_cubed(int N) {
    std::vector<BigInt> p(N + 1, BigInt(0));
    p[0] = 1;
    for (int i = 1; i <= N; ++i) {
        for (int rep = 0; rep < 3; ++rep) {
            // multiply by (1 - q^i) in place, descending powers
            for (int n = N; n >= i; --n) p[n] -= p[n - i];
        }
    }
    return p;
}

} // namespace defexp
