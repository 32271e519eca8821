#include <doctest.h>

#include <sstream>

#include "defexp/expansion.hpp"
#include "defexp/table_io.hpp"

using namespace defexp;

TEST_SUITE("table_io") {

TEST_CASE("round trip preserves every coefficient") {
    DenomTable tab(8);
    PolyTable t = compute_table(tab, 8);
    std::vector<int> m(9);
    for (int n = 1; n <= 8; ++n) m[n] = tab.M(n);

    std::stringstream ss;
    write_poly_table(ss, "P", t.P, m);
    TableFile f = read_poly_table(ss);
    CHECK(f.kind == "P");
    CHECK(f.nmax == 8);
    for (int n = 1; n <= 8; ++n) {
        CHECK(f.polys[n] == t.P[n]);
        CHECK(f.M[n] == tab.M(n));
    }
}

TEST_CASE("write is deterministic") {
    DenomTable tab(5);
    PolyTable t = compute_table(tab, 5);
    std::vector<int> m(6);
    for (int n = 1; n <= 5; ++n) m[n] = tab.M(n);
    std::stringstream a, b;
    write_poly_table(a, "PHAT", t.Phat, m);
    write_poly_table(b, "PHAT", t.Phat, m);
    CHECK(a.str() == b.str());
    CHECK(a.str().substr(0, 31) == "defexp-table v1 kind=PHAT nmax=");
}

TEST_CASE("parse errors") {
    std::stringstream bad1("not-a-table v1 kind=P nmax=1\n");
    CHECK_THROWS(read_poly_table(bad1));
    std::stringstream bad2("defexp-table v1 kind=P nmax=2\nn=1 deg=0 Mn=2\n1\n");
    CHECK_THROWS(read_poly_table(bad2)); // truncated
    std::stringstream bad3("defexp-table v1 kind=P nmax=1\nn=1 deg=1 Mn=2\n1 0\n");
    CHECK_THROWS(read_poly_table(bad3)); // trailing zero coefficient
}

TEST_CASE("rational rendering") {
    CHECK(rational_str(make_rat(3, 2)) == "3/2");
    CHECK(rational_str(BigRat(7)) == "7");
    CHECK(rational_str(make_rat(-4, 8)) == "-1/2");
}

TEST_CASE("sign matrix writers") {
    DenomTable tab(2);
    PolyTable t = compute_table(tab, 2);
    SignMatrix m = sign_matrix(t.P, false);
    std::stringstream txt;
    write_sign_matrix_txt(txt, m);
    CHECK(txt.str() == "+\n- 0 +\n");
    std::stringstream pgm;
    write_sign_matrix_pgm(pgm, m);
    std::string s = pgm.str();
    CHECK(s.substr(0, 9) == "P5\n2 3\n25");
    // 2x3 payload after the header
    CHECK(s.size() == std::string("P5\n2 3\n255\n").size() + 6);
    std::stringstream csv;
    write_digits_csv(csv, digits_matrix(t.P));
    CHECK(csv.str() == "1\n1,,1\n");
}

} // TEST_SUITE
