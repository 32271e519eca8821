#include "defexp/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace defexp {

namespace {
const BigInt kScale = BigInt(1000000); // 10^6 denominator for root covers
}

BigRat upper_root(const BigRat& a, int i) {
    if (a < 0) throw std::invalid_argument("upper_root: negative radicand");
    if (i < 1) throw std::invalid_argument("upper_root: i must be >= 1");
    if (a == 0) return BigRat(0);
    // ceil(a * scale^i), then ceil of its integer i-th root, over scale.
    BigInt spow;
    mpz_pow_ui(spow.get_mpz_t(), kScale.get_mpz_t(), i);
    BigInt num = a.get_num() * spow;
    BigInt t;
    mpz_cdiv_q(t.get_mpz_t(), num.get_mpz_t(), a.get_den().get_mpz_t());
    BigInt root;
    int exact = mpz_root(root.get_mpz_t(), t.get_mpz_t(), i);
    if (!exact) root += 1;
    return make_rat(root, kScale);
}

BigRat lagrange_bound(const IntPoly& p) {
    if (p.is_zero() || p.leading() <= 0)
        throw NonPositiveLeading("lagrange_bound: leading coefficient must be positive");
    const int d = p.degree();
    BigRat largest(0), second(0);
    bool have_any = false;
    for (int i = 1; i <= d; ++i) {
        const BigInt& a = p.coeff(d - i);
        if (a >= 0) continue;
        BigRat u = upper_root(make_rat(-a, p.leading()), i);
        if (!have_any || u > largest) {
            second = have_any ? largest : BigRat(0);
            largest = u;
            have_any = true;
        } else if (u > second) {
            second = u;
        }
    }
    return largest + second;
}

BigRat nonneg_tail_bound(const IntPoly& p, const BigRat& r) {
    if (p.is_zero() || p.leading() <= 0)
        throw NonPositiveLeading("nonneg_tail_bound: leading coefficient must be positive");
    if (r <= 0) throw std::invalid_argument("nonneg_tail_bound: r must be positive");
    const int d = p.degree();
    int m = 0;
    for (int j = d; j >= 0; --j) {
        if (p.coeff(j) < 0) {
            m = j + 1;
            break;
        }
    }
    if (m == 0) return BigRat(0);
    BigRat b(0);
    BigRat rpow(1);
    for (int j = m; j <= d; ++j) {
        b += BigRat(p.coeff(j)) * rpow;
        rpow *= r;
    }
    BigRat c(0);
    for (int i = 1; i <= m; ++i) {
        BigInt a = abs(p.coeff(m - i));
        if (a == 0) continue;
        c = std::max(c, upper_root(BigRat(a) / b, i));
    }
    return std::max(r, BigRat(2 * c));
}

NonnegReport check_nonnegative(const IntPoly& p, const std::vector<BigRat>& r_grid) {
    NonnegReport rep;
    rep.lagrange = lagrange_bound(p);
    rep.best = rep.lagrange;
    for (const BigRat& r : r_grid) {
        BigRat b = nonneg_tail_bound(p, r);
        rep.nu_r.emplace_back(r, b);
        rep.best = std::min(rep.best, b);
    }
    BigInt lim;
    mpz_cdiv_q(lim.get_mpz_t(), rep.best.get_num().get_mpz_t(), rep.best.get_den().get_mpz_t());
    rep.sweep_limit = std::max(1L, lim.get_si());
    rep.all_nonnegative = true;
    for (long k = 1; k <= rep.sweep_limit; ++k) {
        BigInt v = p.eval(BigInt(k));
        if (v < 0) {
            rep.all_nonnegative = false;
            rep.first_negative_k = k;
            rep.first_negative_value = v;
            break;
        }
    }
    return rep;
}

SignMatrix sign_matrix(const std::vector<IntPoly>& polys, bool shifted) {
    SignMatrix m;
    m.shifted = shifted;
    m.rows.resize(polys.size());
    for (size_t n = 1; n < polys.size(); ++n) {
        IntPoly p = shifted ? polys[n].shifted_by_one() : polys[n];
        std::vector<int>& row = m.rows[n];
        row.resize(p.degree() + 1);
        for (int i = 0; i <= p.degree(); ++i) row[i] = sgn(p.coeff(i));
    }
    return m;
}

std::vector<std::vector<int>> digits_matrix(const std::vector<IntPoly>& polys) {
    std::vector<std::vector<int>> m(polys.size());
    for (size_t n = 1; n < polys.size(); ++n) {
        const IntPoly& p = polys[n];
        m[n].resize(p.degree() + 1);
        for (int i = 0; i <= p.degree(); ++i) m[n][i] = decimal_digits(p.coeff(i));
    }
    return m;
}

} // namespace defexp
