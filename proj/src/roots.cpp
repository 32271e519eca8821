#include "defexp/roots.hpp"

#include <algorithm>
#include <stdexcept>

#include "defexp/verify.hpp"

namespace defexp {

namespace {

// Divide by the (positive) content without touching the sign.
IntPoly strip_content(const IntPoly& p) {
    if (p.is_zero()) return p;
    BigInt g = p.content();
    if (g == 1) return p;
    std::vector<BigInt> c = p.coeffs();
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(c));
}

// Squarefree part, roots at k=1 removed, leading coefficient positive.
IntPoly prepare_above_one(const IntPoly& p) {
    if (p.degree() < 1) return IntPoly();
    IntPoly q = poly_squarefree(p).primitive();
    while (!q.is_zero() && q.eval(BigInt(1)) == 0) q = poly_exact_div(q, IntPoly({-1, 1}));
    if (q.degree() < 1) return IntPoly();
    return q;
}

int sign_at_rat(const IntPoly& p, const BigRat& x) {
    return p.sign_at(x.get_num(), x.get_den());
}

// A split point c in (lo,hi) with p(c) != 0; fractions with growing prime
// denominators guarantee more candidates than p has roots.
BigRat split_point(const IntPoly& p, const BigRat& lo, const BigRat& hi) {
    static const long primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                  31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
    BigRat width = hi - lo;
    for (long q : primes) {
        for (long j = 1; j < q; ++j) {
            BigRat c = lo + width * make_rat(j, q);
            if (sign_at_rat(p, c) != 0) return c;
        }
    }
    throw std::logic_error("split_point: no valid split found");
}

} // namespace

std::vector<IntPoly> sturm_chain(const IntPoly& squarefree) {
    std::vector<IntPoly> chain;
    chain.push_back(squarefree);
    chain.push_back(squarefree.derivative());
    while (!chain.back().is_zero() && chain.back().degree() >= 0) {
        const IntPoly& a = chain[chain.size() - 2];
        const IntPoly& b = chain.back();
        IntPoly r = signed_pseudo_rem(a, b);
        if (r.is_zero()) break;
        chain.push_back(-strip_content(r));
        if (chain.back().degree() == 0) break;
    }
    return chain;
}

int sign_variations_at(const std::vector<IntPoly>& chain, const BigInt& num, const BigInt& den) {
    int changes = 0, prev = 0;
    for (const IntPoly& p : chain) {
        int s = p.sign_at(num, den);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

int sign_variations_at_infinity(const std::vector<IntPoly>& chain) {
    int changes = 0, prev = 0;
    for (const IntPoly& p : chain) {
        if (p.is_zero()) continue;
        int s = sgn(p.leading());
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

int sturm_count_above_one(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("sturm_count_above_one: zero polynomial");
    IntPoly q = prepare_above_one(p);
    if (q.is_zero()) return 0;
    auto chain = sturm_chain(q);
    return sign_variations_at(chain, BigInt(1), BigInt(1)) - sign_variations_at_infinity(chain);
}

RootCertificate isolate_roots_above_one(const IntPoly& p, int digits) {
    RootCertificate cert;
    IntPoly q = prepare_above_one(p);
    if (q.is_zero()) return cert;
    auto chain = sturm_chain(q);

    const auto vat = [&](const BigRat& x) {
        return sign_variations_at(chain, x.get_num(), x.get_den());
    };
    BigRat lo0(1);
    BigInt hib;
    BigRat nu = lagrange_bound(q);
    mpz_cdiv_q(hib.get_mpz_t(), nu.get_num().get_mpz_t(), nu.get_den().get_mpz_t());
    BigRat hi0(hib + 1);

    struct Seg {
        BigRat lo, hi;
        int vlo, vhi;
    };
    std::vector<Seg> work{{lo0, hi0, vat(lo0), vat(hi0)}};
    while (!work.empty()) {
        Seg s = std::move(work.back());
        work.pop_back();
        int cnt = s.vlo - s.vhi;
        if (cnt <= 0) continue;
        if (cnt == 1) {
            cert.intervals.emplace_back(s.lo, s.hi);
            continue;
        }
        BigRat c = split_point(q, s.lo, s.hi);
        int vc = vat(c);
        work.push_back({s.lo, c, s.vlo, vc});
        work.push_back({c, s.hi, vc, s.vhi});
    }
    std::sort(cert.intervals.begin(), cert.intervals.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    cert.count = static_cast<int>(cert.intervals.size());
    for (const auto& [lo, hi] : cert.intervals) {
        if (sign_at_rat(q, lo) * sign_at_rat(q, hi) >= 0)
            throw std::logic_error("isolating interval without sign change");
        cert.decimals.push_back(refine_root(q, lo, hi, digits));
    }
    return cert;
}

std::string decimal_floor_string(const BigRat& x, int digits) {
    if (x < 0) throw std::invalid_argument("decimal_floor_string: negative value");
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    BigInt v;
    mpz_fdiv_q(v.get_mpz_t(), BigInt(x.get_num() * scale).get_mpz_t(), x.get_den().get_mpz_t());
    BigInt ip = v / scale, fp = v % scale;
    std::string frac = fp.get_str();
    frac.insert(frac.begin(), digits - frac.size(), '0');
    return ip.get_str() + "." + frac;
}

std::string refine_root(const IntPoly& p, const BigRat& lo_in, const BigRat& hi_in, int digits) {
    BigRat lo = lo_in, hi = hi_in;
    int slo = sign_at_rat(p, lo);
    if (slo == 0 || sign_at_rat(p, hi) == 0 || slo * sign_at_rat(p, hi) > 0)
        throw std::invalid_argument("refine_root: interval does not bracket a single root");
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    const auto cell = [&](const BigRat& x) {
        BigInt c;
        mpz_fdiv_q(c.get_mpz_t(), BigInt(x.get_num() * scale).get_mpz_t(),
                   x.get_den().get_mpz_t());
        return c;
    };
    for (int iter = 0;; ++iter) {
        if (cell(lo) == cell(hi)) return decimal_floor_string(lo, digits);
        BigRat mid = (lo + hi) / 2;
        int sm = sign_at_rat(p, mid);
        if (sm == 0) return decimal_floor_string(mid, digits); // root hit exactly
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
        if (iter % 64 == 63) {
            // The root may sit exactly on a 10^-digits grid line.
            BigRat boundary = make_rat(cell(hi), scale);
            if (boundary > lo && boundary < hi && sign_at_rat(p, boundary) == 0)
                return decimal_floor_string(boundary, digits);
        }
    }
}

std::optional<std::string> largest_root_above_one(const IntPoly& p, int digits) {
    if (p.is_zero() || p.degree() < 1) return std::nullopt;
    RootCertificate cert = isolate_roots_above_one(p, digits);
    if (cert.count == 0) return std::nullopt;
    return cert.decimals.back();
}

} // namespace defexp
