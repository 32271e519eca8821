#include <doctest.h>

#include "defexp/expansion.hpp"
#include "defexp/verify.hpp"

using namespace defexp;

namespace {

std::vector<BigRat> default_grid() {
    return {BigRat(10), BigRat(20), BigRat(50), BigRat(100)};
}

} // namespace

TEST_SUITE("verify") {

TEST_CASE("upper_root covers the radical") {
    BigRat u = upper_root(make_rat(1, 3), 2);
    CHECK(u * u >= make_rat(1, 3));
    CHECK(u < make_rat(5774, 10000) + make_rat(1, 100000)); // sqrt(1/3) ~ 0.57735
    CHECK(upper_root(BigRat(8), 3) >= 2);
    CHECK(upper_root(BigRat(8), 3) < make_rat(2000001, 1000000));
    CHECK(upper_root(BigRat(0), 5) == 0);
}

TEST_CASE("lagrange bound") {
    CHECK(lagrange_bound(IntPoly({-1, 0, 1})) == 1); // x^2 - 1
    BigRat nu2 = lagrange_bound(IntPoly({-1, 0, 3}));
    CHECK(nu2 >= make_rat(5773, 10000));
    CHECK(nu2 <= make_rat(5775, 10000));
    CHECK(lagrange_bound(IntPoly({1, 2, 3})) == 0); // no negative coefficients
    CHECK_THROWS_AS(lagrange_bound(IntPoly({1, -2})), NonPositiveLeading);
    // soundness: value is positive just above the bound
    IntPoly p({4, 6, -4, -7, 8, 4});
    BigRat nu = lagrange_bound(p);
    BigInt above = nu.get_num() / nu.get_den() + 1;
    CHECK(p.eval(above) > 0);
    CHECK(p.eval(BigInt(above + 1)) > 0);
}

TEST_CASE("nonneg tail bound") {
    IntPoly p3({4, 6, -4, -7, 8, 4});
    BigRat b = nonneg_tail_bound(p3, BigRat(1));
    // m = 4, b(1) = 12, c(1) = (6/12)^(1/3), bound = 2 c(1) ~ 1.5874
    CHECK(b >= make_rat(15874, 10000));
    CHECK(b <= make_rat(15876, 10000));
    CHECK(nonneg_tail_bound(IntPoly({1, 1}), BigRat(7)) == 0);
    // soundness above the bound
    BigInt above = b.get_num() / b.get_den() + 1;
    CHECK(p3.eval(above) > 0);
}

TEST_CASE("nonnegativity certification") {
    auto grid = default_grid();
    NonnegReport r2 = check_nonnegative(IntPoly({-1, 0, 3}), grid);
    CHECK(r2.all_nonnegative);
    CHECK(r2.sweep_limit == 1);

    // a witness case: (k-2)(k-3) = 6 -5k + k^2 is negative at no integer... use
    // (k-2)(k-4) = 8 - 6k + k^2, negative at k = 3
    NonnegReport bad = check_nonnegative(IntPoly({8, -6, 1}), grid);
    CHECK(!bad.all_nonnegative);
    CHECK(bad.first_negative_k.value() == 3);
    CHECK(bad.first_negative_value == -1);
}

TEST_CASE("whole table nonnegative at small scale") {
    DenomTable tab(12);
    PolyTable t = compute_table(tab, 12);
    auto grid = default_grid();
    for (int n = 2; n <= 12; ++n) {
        for (const IntPoly* p : {&t.P[n], &t.Phat[n]}) {
            NonnegReport r = check_nonnegative(*p, grid);
            CHECK(r.all_nonnegative);
            CHECK(r.nu_r.size() == 4);
            CHECK(r.best >= 0);
            // bound soundness spot check at the first two integers above
            BigInt a(r.sweep_limit + 1);
            CHECK(p->eval(a) > 0);
            CHECK(p->eval(BigInt(a + 1)) > 0);
        }
    }
}

TEST_CASE("sign matrix") {
    DenomTable tab(3);
    PolyTable t = compute_table(tab, 3);
    SignMatrix m = sign_matrix(t.P, false);
    CHECK(m.rows[1] == std::vector<int>{1});
    CHECK(m.rows[2] == std::vector<int>{-1, 0, 1});
    SignMatrix ms = sign_matrix(t.P, true);
    CHECK(ms.rows[2] == std::vector<int>{1, 1, 1});
    // row n has M_n - 1 entries
    for (int n = 1; n <= 3; ++n) CHECK((int)m.rows[n].size() == tab.M(n) - 1);
}

TEST_CASE("digits matrix") {
    DenomTable tab(2);
    PolyTable t = compute_table(tab, 2);
    auto d = digits_matrix(t.P);
    CHECK(d[2] == std::vector<int>{1, 0, 1});
}

} // TEST_SUITE
