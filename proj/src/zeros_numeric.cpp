#include "defexp/zeros_numeric.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "defexp/numtheory.hpp"

namespace defexp {

namespace {

BigReal factorial_real(long n, mpfr_prec_t bits) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    BigReal r(bits);
    mpfr_set_z(r.raw(), f.get_mpz_t(), MPFR_RNDN);
    return r;
}

BigReal at_precision(const BigReal& x, mpfr_prec_t bits) {
    BigReal r(bits);
    mpfr_set(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

// Estimated log10 of the peak term of f(x;q) (double precision is plenty).
double peak_term_log10(const BigReal& x, const BigReal& q) {
    double lx = x.log10_abs(), lq = q.log10_abs();
    if (lx == -HUGE_VAL) return 0.0;
    double best = 0.0, lfact = 0.0;
    for (long n = 1; n < 100000; ++n) {
        lfact += std::log10(static_cast<double>(n));
        double lt = n * lx + (n * (n - 1) / 2.0) * lq - lfact;
        best = std::max(best, lt);
        if (lt < best - 40 && n * lx + (n - 1) * lq < 0) break;
    }
    return best;
}

} // namespace

BigReal f_eval(const BigReal& x, const BigReal& q, int digits) {
    if (q.abs() >= BigReal(std::string("1"), 8)) throw std::invalid_argument("f_eval: |q| >= 1");
    const mpfr_prec_t bits = BigReal::bits_for_digits(digits + 12);
    BigReal xs = at_precision(x, bits), qs = at_precision(q, bits);
    BigReal term(bits, 1), sum(bits, 1), qpow(bits, 1); // qpow = q^n
    BigReal max_mag(bits, 1);
    const BigReal cutoff = pow10(-(digits + 10), 16);
    for (long n = 1;; ++n) {
        // term_{n} = term_{n-1} * x * q^{n-1} / n
        term = term * xs * qpow / n;
        qpow = qpow * qs;
        sum += term;
        BigReal mag = sum.abs();
        if (mag > max_mag) max_mag = mag;
        BigReal tmag = term.abs();
        if (tmag < cutoff * max_mag && xs.abs() * qpow < BigReal(bits, 1)) break;
        if (n > 1000000) throw NoConvergence("f_eval: series did not truncate");
    }
    if (sum.is_zero() || sum.abs().log10_abs() < max_mag.log10_abs() - digits / 2.0)
        throw PrecisionExhausted("f_eval: cancellation exceeded half the working digits");
    return sum;
}

BigReal f_eval_absolute(const BigReal& x, const BigReal& q, int digits) {
    int boost = static_cast<int>(std::ceil(std::max(0.0, peak_term_log10(x, q))));
    // Working digits so that digits/2 exceeds the expected cancellation
    // depth; values below the requested absolute scale (residuals at zeros)
    // can cancel deeper, so raise the precision and retry.
    int work = 2 * (digits + boost) + 20;
    for (int attempt = 0; attempt < 5; ++attempt) {
        try {
            return f_eval(x, q, work);
        } catch (const PrecisionExhausted&) {
            work *= 2;
        }
    }
    return f_eval(x, q, work);
}

BigReal solve_zero(const BigReal& q, int k, int digits, bool allow_unproven) {
    if (k < 1) throw std::invalid_argument("solve_zero: k must be >= 1");
    if (q.sign() <= 0) throw std::invalid_argument("solve_zero: q must be positive");
    // exact 1/5 plus slack for the binary rounding of a decimal "0.2" input
    static const BigRat q_gate = make_rat(1, 5) + make_rat(1, BigInt("1" + std::string(30, '0')));
    if (q.cmp(q_gate) > 0 && !allow_unproven)
        throw std::invalid_argument("solve_zero: q above the proven regime (pass unproven flag)");
    if (q.cmp(BigRat(1)) >= 0) throw std::invalid_argument("solve_zero: q must be < 1");

    const int work_digits = digits + 25 + static_cast<int>(0.44 * k);
    const mpfr_prec_t bits = BigReal::bits_for_digits(work_digits);
    const BigReal qs = at_precision(q, bits);
    const BigReal tol = pow10(-(digits + 10), 16);
    const double lq = qs.log10_abs();

    int iterations = 0;
    BigReal w(bits, 1);

    // Fixed-point phase: w <- 1 + sum_i (-1)^i [a_i(k) w^-i - a_i(-k)^-1 w^(i+1)] q^(i(i+1)/2).
    // Only run into Newton's basin; the quadratic phase finishes the job.
    for (;; ++iterations) {
        if (iterations > 200) throw NoConvergence("solve_zero: fixed point did not converge");
        BigReal next(bits, 1);
        BigReal alpha_pos(bits, 1), alpha_neg_den(bits, 1), kpow(bits, 1);
        for (long i = 1;; ++i) {
            if ((i * (i + 1) / 2.0) * lq + 0.1 * (i + 1) < -(work_digits + 15.0)) break;
            alpha_pos = alpha_pos * BigReal(bits, k - i) / k; // prod (1 - l/k)
            alpha_neg_den = alpha_neg_den * BigReal(bits, k + i);
            kpow = kpow * k;
            BigReal qt = qs.pow_int(i * (i + 1) / 2);
            BigReal contrib = (i < k ? alpha_pos * w.pow_int(-i) : BigReal(bits, 0)) -
                              kpow / alpha_neg_den * w.pow_int(i + 1);
            if (i % 2 == 1) contrib = -contrib;
            next += contrib * qt;
        }
        BigReal delta = (next - w).abs();
        w = next;
        if (delta.log10_abs() < -10.0) break;
    }

    // Newton phase on g_k.
    for (;; ++iterations) {
        if (iterations > 200) throw NoConvergence("solve_zero: Newton did not converge");
        BigReal g(bits, 0), gp(bits, 0);
        {
            BigReal coeff(bits, 1), wpow(bits, 1), wprev(bits, 0);
            const BigReal cut = pow10(-(work_digits + 10), 16);
            BigReal gacc(bits, 0), gpacc(bits, 0);
            for (long n = 0;; ++n) {
                if (n > 0) {
                    coeff = coeff * k / n;
                    wprev = wpow;
                    wpow = wpow * w;
                }
                long m = n - k;
                BigReal t = coeff * wpow * qs.pow_int(m * (m + 1) / 2);
                BigReal tp = n == 0 ? BigReal(bits, 0)
                                    : coeff * wprev * qs.pow_int(m * (m + 1) / 2) * n;
                if (n % 2 == 1) {
                    gacc -= t;
                    gpacc -= tp;
                } else {
                    gacc += t;
                    gpacc += tp;
                }
                if (n > k && t.abs() < cut) break;
            }
            g = gacc;
            gp = gpacc;
        }
        if (gp.is_zero()) throw NoConvergence("solve_zero: vanishing derivative");
        BigReal step = g / gp;
        w -= step;
        if (step.abs() < tol) break;
    }

    BigReal x = -(qs.pow_int(1 - k) * w) * k;

    if (q.cmp(make_rat(207875, 1000000)) <= 0) {
        // annulus ordering of Theorem-style zero separation
        BigReal s = qs.sqrt();
        BigReal upper = s.pow_int(1 - 2 * k) * k;
        bool ok = x.abs() < upper;
        if (k >= 2) ok = ok && x.abs() > s.pow_int(3 - 2 * k) * (k - 1);
        if (!ok) throw NoConvergence("solve_zero: zero escaped its annulus");
    }
    return x;
}

std::vector<BigReal> zero_set(const BigReal& q, int count, int digits, bool allow_unproven) {
    std::vector<BigReal> x(count + 1, BigReal(8, 0));
    for (int k = 1; k <= count; ++k) x[k] = solve_zero(q, k, digits, allow_unproven);
    return x;
}

IdentityResiduals check_zero_identities(const BigReal& q, int J, int digits, int kmax) {
    const int work = digits + 30;
    const mpfr_prec_t bits = BigReal::bits_for_digits(work);
    const BigReal qs = at_precision(q, bits);
    std::vector<BigReal> x = zero_set(qs, J, work);

    IdentityResiduals res;
    res.sum.assign(kmax + 1, BigReal(8, 0));
    res.prod.assign(kmax + 1, BigReal(8, 0));
    res.prime.assign(kmax + 1, BigReal(8, 0));

    const long hexp = -(digits / 3 + (digits % 3 != 0));
    const BigReal h = pow10(hexp, work);

    for (int k = 1; k <= kmax; ++k) {
        BigReal sum(bits, 0);
        for (int j = 1; j <= J; ++j) sum += BigReal(bits, 1) / (x[k] - qs * x[j]);
        res.sum[k] = sum.abs();

        BigReal prod(bits, 1);
        for (int j = 1; j <= J; ++j) {
            if (j == k) continue;
            prod = prod * (x[j] - x[k]) / (x[j] - qs * x[k]);
        }
        BigReal lhs = (qs - BigReal(bits, 1)) * x[k];
        res.prod[k] = ((lhs - prod) / lhs).abs();

        // 5-point central difference for x_k'(q); the tiny perturbations are
        // admitted even when q sits exactly on the regime edge (the annulus
        // assertion inside still guards them).
        BigReal xp1 = solve_zero(qs + h, k, work, true);
        BigReal xm1 = solve_zero(qs - h, k, work, true);
        BigReal xp2 = solve_zero(qs + h + h, k, work, true);
        BigReal xm2 = solve_zero(qs - h - h, k, work, true);
        BigReal deriv = (xm2 - xp2 + (xp1 - xm1) * 8) / (h * 12);
        BigReal rhs(bits, 0);
        for (int j = 1; j <= J; ++j) rhs += BigReal(bits, 1) / (x[j] - qs * x[k]);
        rhs = rhs * x[k] * x[k] / 2;
        res.prime[k] = (deriv - rhs).abs();
    }
    return res;
}

std::vector<BigReal> cbar_sum_residuals(const BigRat& q, int nmax_c, int J, int digits) {
    const int work = digits + 30;
    const mpfr_prec_t bits = BigReal::bits_for_digits(work);
    const BigReal qs(q, work);
    std::vector<BigReal> x = zero_set(qs, J, work);
    std::vector<IntPoly> cbar = cbar_polys(nmax_c);

    std::vector<BigReal> out(nmax_c + 1, BigReal(8, 0));
    for (int n = 1; n <= nmax_c; ++n) {
        BigReal s(bits, 0);
        for (int k = 1; k <= J; ++k) s += x[k].pow_int(-n);
        s = -(s * factorial_real(n - 1, bits));
        BigReal exact(cbar[n].eval(q), work);
        out[n] = (s - exact).abs();
    }
    return out;
}

BigReal rouche_sum(int k, const BigReal& u, const BigReal& t, int digits) {
    if (k < 0) throw std::invalid_argument("rouche_sum: k must be >= 0");
    const mpfr_prec_t bits = BigReal::bits_for_digits(digits + 15);
    const BigReal us = at_precision(u, bits), ts = at_precision(t, bits);
    const BigReal s = ts.sqrt();
    const BigReal cut = pow10(-(digits + 10), 16);
    BigReal sum(bits, 0);
    BigReal invfact(bits, 1);
    for (long n = 0;; ++n) {
        if (n > 0) invfact = invfact / n;
        long m = n - k;
        BigReal term = us.pow_int(m) * s.pow_int(m * m) * invfact;
        sum += term;
        if (n > k && term < cut) break;
        if (n > 100000) throw NoConvergence("rouche_sum: series did not truncate");
    }
    return sum * factorial_real(k, bits);
}

BigReal theta_sum(const BigReal& t, int digits) {
    const mpfr_prec_t bits = BigReal::bits_for_digits(digits + 15);
    const BigReal s = at_precision(t, bits).sqrt();
    const BigReal cut = pow10(-(digits + 12), 16);
    BigReal sum(bits, 1);
    for (long m = 1;; ++m) {
        BigReal term = s.pow_int(m * m);
        sum += term + term;
        if (term < cut) break;
        if (m > 100000) throw NoConvergence("theta_sum: series did not truncate");
    }
    return sum;
}

BigRat series_zero_estimate(const DenomTable& tab, const PolyTable& t, const BigRat& q, int k,
                            int N) {
    if (N > t.nmax) throw std::invalid_argument("series_zero_estimate: N above table nmax");
    BigRat acc(1);
    BigRat qpow(1);
    BigInt kk(k);
    for (int n = 1; n <= N; ++n) {
        qpow *= q;
        acc += make_rat(t.P[n].eval(kk), tab.Q(n).eval(kk)) * qpow;
    }
    BigRat qfac(1);
    for (int e = 0; e < k - 1; ++e) qfac /= q;
    return BigRat(-k) * qfac * acc;
}

} // namespace defexp
