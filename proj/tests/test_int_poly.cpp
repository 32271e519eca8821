#include <doctest.h>

#include <random>

#include "defexp/int_poly.hpp"

using namespace defexp;

namespace {

IntPoly random_poly(std::mt19937& rng, int max_deg, int max_abs) {
    std::uniform_int_distribution<int> dd(0, max_deg), dc(-max_abs, max_abs);
    int d = dd(rng);
    std::vector<BigInt> c(d + 1);
    for (auto& x : c) x = dc(rng);
    return IntPoly(std::move(c));
}

} // namespace

TEST_SUITE("int_poly") {

TEST_CASE("multiplication basics") {
    IntPoly one({1});
    IntPoly p({-1, 0, 3}); // 3k^2 - 1
    CHECK(one * p == p);
    CHECK(IntPoly({0, 1}) * IntPoly({1, 1}) == IntPoly({0, 1, 1})); // k(k+1) = k^2+k
    // k(k+1) is the denominator of the first expansion coefficient 1/(k(k+1))
    IntPoly q1 = IntPoly({0, 1}) * IntPoly({1, 1});
    CHECK(q1.eval(BigInt(1)) == 2);
}

TEST_CASE("exact division") {
    IntPoly k({0, 1}), k1({1, 1}), k2({2, 1});
    IntPoly q1 = k * k1;
    IntPoly q2 = k * k * k1 * k1;
    IntPoly q3 = k * k * k * k1 * k1 * k1 * k2;
    CHECK(poly_exact_div(q3, q1) == k * k * k1 * k1 * k2);
    CHECK(poly_exact_div(q2, q1 * q1) == IntPoly({1}));
    CHECK_THROWS_AS(poly_exact_div(IntPoly({0, 1, 1}), k2), NotDivisible);
}

TEST_CASE("evaluation") {
    IntPoly p2({-1, 0, 3});
    CHECK(p2.eval(BigInt(1)) == 2);
    IntPoly p3({4, 6, -4, -7, 8, 4});
    CHECK(p3.eval(BigInt(1)) == 11);
    CHECK(p3.eval(BigInt(0)) == 4); // constant term
    CHECK(p2.eval(make_rat(1, 3)) == make_rat(-2, 3));
}

TEST_CASE("shift by one") {
    CHECK(IntPoly({-1, 0, 3}).shifted_by_one() == IntPoly({2, 6, 3}));
    IntPoly p3({4, 6, -4, -7, 8, 4});
    CHECK(p3.shifted_by_one() == IntPoly({11, 29, 63, 65, 28, 4}));
    CHECK(IntPoly({7}).shifted_by_one() == IntPoly({7}));
}

TEST_CASE("derivative, gcd, squarefree") {
    CHECK(IntPoly({-1, 0, 3}).derivative() == IntPoly({0, 6}));
    CHECK(poly_gcd(IntPoly({-1, 0, 1}), IntPoly({-1, 1})) == IntPoly({-1, 1}));
    IntPoly p = IntPoly({-1, 1}) * IntPoly({-1, 1}) * IntPoly({2, 1});
    CHECK(poly_squarefree(p) == IntPoly({-1, 1}) * IntPoly({2, 1}));
    // gcd normalization: content removed, positive leading coefficient
    CHECK(poly_gcd(IntPoly({0, 2}), IntPoly({0, -4})) == IntPoly({0, 1}));
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(42);
    for (int it = 0; it < 200; ++it) {
        IntPoly a = random_poly(rng, 6, 9), b = random_poly(rng, 6, 9), c = random_poly(rng, 6, 9);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK(poly_exact_div(a * b, b) == a);
    }
}

TEST_CASE("shift commutes with evaluation") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dn(-20, 20), dd(1, 7);
    for (int it = 0; it < 100; ++it) {
        IntPoly p = random_poly(rng, 8, 50);
        BigRat x = make_rat(dn(rng), dd(rng));
        CHECK(p.shifted_by_one().eval(x) == p.eval(x + 1));
    }
}

TEST_CASE("decimal digits") {
    CHECK(decimal_digits(BigInt(0)) == 0);
    CHECK(decimal_digits(BigInt(-9)) == 1);
    CHECK(decimal_digits(BigInt(10)) == 2);
    CHECK(decimal_digits(BigInt("99999999999999999999")) == 20);
}

} // TEST_SUITE
