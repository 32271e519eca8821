#include <doctest.h>

#include "defexp/expansion.hpp"
#include "reference_tables.hpp"

using namespace defexp;
using defexp_test::reference_p;
using defexp_test::reference_phat;

TEST_SUITE("expansion") {

TEST_CASE("first fixed-point steps") {
    DenomTable tab(3);
    QSeries w1 = fixed_point_step(tab, QSeries::one(0), 1);
    CHECK(w1.num[1] == IntPoly({1})); // 1 + q/(k(k+1)) + ...
    QSeries w2 = fixed_point_step(tab, w1, 2);
    CHECK(w2.num[2] == IntPoly({-1, 0, 3}));
    QSeries w3 = fixed_point_step(tab, w2, 3);
    CHECK(w3.num[3] == IntPoly({4, 6, -4, -7, 8, 4}));
}

TEST_CASE("table matches the reference polynomials") {
    DenomTable tab(10);
    PolyTable t = compute_table(tab, 10);
    for (int n = 1; n <= 10; ++n) {
        CHECK(t.P[n] == reference_p()[n]);
        CHECK(t.Phat[n] == reference_phat()[n]);
    }
    CHECK(t.P[10].coeff(0) == -466752);
    CHECK(t.Phat[10].coeff(0) == -1612416);
}

TEST_CASE("reciprocal identity") {
    DenomTable tab(12);
    PolyTable t = compute_table(tab, 12);
    QSeries w = table_series(t, false, 12);
    QSeries winv = series_recip(tab, w, 12);
    for (int n = 1; n <= 12; ++n) CHECK(winv.num[n] == -t.Phat[n]);
}

TEST_CASE("multinomial oracle agrees with the fixed point") {
    DenomTable tab(12);
    PolyTable a = compute_table(tab, 12);
    PolyTable b = compute_table_multinomial(tab, 12);
    for (int n = 1; n <= 12; ++n) {
        CHECK(a.P[n] == b.P[n]);
        CHECK(a.Phat[n] == b.Phat[n]);
    }
    CHECK(b.provenance == Method::kMultinomial);
}

TEST_CASE("degree and leading structure") {
    DenomTable tab(16);
    PolyTable t = compute_table(tab, 16);
    for (int n = 2; n <= 16; ++n) {
        BigInt s = sigma(n);
        for (const IntPoly* p : {&t.P[n], &t.Phat[n]}) {
            CHECK(p->degree() == tab.M(n) - 2);
            CHECK(p->leading() == s);
            BigInt second = p->coeff(tab.M(n) - 3);
            CHECK(second == s * (tab.mu(1, n) - n));
            if (n == 2) CHECK(second == 0);
            if (n >= 3) CHECK(second > 0);
        }
    }
}

TEST_CASE("third coefficient closed form") {
    DenomTable tab(16);
    PolyTable t = compute_table(tab, 16);
    for (int n = 2; n <= 16; ++n) {
        BigInt s = sigma(n), m1 = tab.mu(1, n), m2 = tab.mu(2, n);
        BigInt head = s * (5 * BigInt(n) * n + 6 * n - 1 + 5 * m1 * m1 - 5 * m2 - 10 * n * m1);
        BigInt conv = convolution_sigma(n);
        for (int hat = 0; hat <= 1; ++hat) {
            const IntPoly& p = hat ? t.Phat[n] : t.P[n];
            BigInt numer = head - (hat ? 23 : 13) * conv;
            BigRat expect = make_rat(numer, 10);
            CHECK(BigRat(p.coeff(tab.M(n) - 4)) == expect);
        }
    }
    // spot values at n = 3
    CHECK(t.P[3].coeff(3) == -7);
    CHECK(t.Phat[3].coeff(3) == -13);
}

TEST_CASE("shifted coefficients") {
    DenomTable tab(3);
    PolyTable t = compute_table(tab, 3);
    auto sh = shifted_numerators(t.P);
    CHECK(sh[1] == IntPoly({1}));
    CHECK(sh[2] == IntPoly({2, 6, 3}));
    CHECK(sh[3] == IntPoly({11, 29, 63, 65, 28, 4}));
}

TEST_CASE("alpha pairs") {
    AlphaPair a2 = alpha_pair(2);
    CHECK(a2.pos_num == IntPoly({2, -3, 1}));  // (k-1)(k-2)
    CHECK(a2.neg_den == IntPoly({2, 3, 1}));   // (k+1)(k+2)
    CHECK(a2.pos_num.degree() == 2);
}

} // TEST_SUITE
