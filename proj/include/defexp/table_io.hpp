#pragma once

// Line-oriented text formats, bit-exact and diffable:
//
//   defexp-table v1 kind=<P|PHAT|Q> nmax=<N>
//   n=<n> deg=<d> Mn=<M>
//   <d+1 signed decimal coefficients, ascending powers>
//   ...
//
// Reports are `key=value` lines with stable ordering by n. Sign matrices
// are exported as text grids of + - 0 or binary PGM (P5, one byte per
// pixel: 255 positive, 0 negative, 128 zero/outside); digit-count
// matrices as CSV.

#include <iosfwd>
#include <string>
#include <vector>

#include "defexp/numtheory.hpp"
#include "defexp/roots.hpp"
#include "defexp/verify.hpp"

namespace defexp {

struct TableFile {
    std::string kind; // P, PHAT or Q
    int nmax = 0;
    std::vector<IntPoly> polys; // [1..nmax]
    std::vector<int> M;         // [1..nmax]
};

void write_poly_table(std::ostream& os, const std::string& kind,
                      const std::vector<IntPoly>& polys, const std::vector<int>& m);
TableFile read_poly_table(std::istream& is);

void write_poly_table_file(const std::string& path, const std::string& kind,
                           const std::vector<IntPoly>& polys, const std::vector<int>& m);
TableFile read_poly_table_file(const std::string& path);

std::string rational_str(const BigRat& x);

void write_verify_report(std::ostream& os, const std::vector<NonnegReport>& reports,
                         const std::vector<BigRat>& r_grid, int nmax);

void write_root_report(std::ostream& os, const std::vector<RootCertificate>& certs, int digits);

void write_sign_matrix_txt(std::ostream& os, const SignMatrix& m);
void write_sign_matrix_pgm(std::ostream& os, const SignMatrix& m);
void write_digits_csv(std::ostream& os, const std::vector<std::vector<int>>& m);

} // namespace defexp
