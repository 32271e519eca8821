#include "defexp/table_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace defexp {

namespace {

std::runtime_error parse_error(const std::string& what) {
    return std::runtime_error("table parse error: " + what);
}

} // namespace

void write_poly_table(std::ostream& os, const std::string& kind,
                      const std::vector<IntPoly>& polys, const std::vector<int>& m) {
    const int nmax = static_cast<int>(polys.size()) - 1;
    os << "defexp-table v1 kind=" << kind << " nmax=" << nmax << "\n";
    for (int n = 1; n <= nmax; ++n) {
        const IntPoly& p = polys[n];
        os << "n=" << n << " deg=" << p.degree() << " Mn=" << m[n] << "\n";
        for (int i = 0; i <= p.degree(); ++i) {
            if (i) os << ' ';
            os << p.coeff(i).get_str();
        }
        os << "\n";
    }
}

TableFile read_poly_table(std::istream& is) {
    TableFile t;
    std::string header;
    if (!std::getline(is, header)) throw parse_error("empty input");
    std::istringstream hs(header);
    std::string magic, version;
    hs >> magic >> version;
    if (magic != "defexp-table") throw parse_error("bad magic '" + magic + "'");
    if (version != "v1") throw parse_error("unsupported version '" + version + "'");
    std::string kind_field, tok;
    int nmax = -1;
    while (hs >> tok) {
        if (tok.rfind("kind=", 0) == 0) kind_field = tok.substr(5);
        if (tok.rfind("nmax=", 0) == 0) nmax = std::stoi(tok.substr(5));
    }
    if (kind_field.empty() || nmax < 1) throw parse_error("missing kind/nmax");
    t.kind = kind_field;
    t.nmax = nmax;
    t.polys.assign(nmax + 1, IntPoly());
    t.M.assign(nmax + 1, 0);
    for (int n = 1; n <= nmax; ++n) {
        std::string meta;
        if (!std::getline(is, meta)) throw parse_error("truncated at n=" + std::to_string(n));
        int rn = -1, deg = -2, mn = -1;
        std::istringstream ms(meta);
        while (ms >> tok) {
            if (tok.rfind("n=", 0) == 0) rn = std::stoi(tok.substr(2));
            if (tok.rfind("deg=", 0) == 0) deg = std::stoi(tok.substr(4));
            if (tok.rfind("Mn=", 0) == 0) mn = std::stoi(tok.substr(3));
        }
        if (rn != n) throw parse_error("record out of order at n=" + std::to_string(n));
        std::string coeffs;
        if (!std::getline(is, coeffs)) throw parse_error("missing coefficients at n=" + meta);
        std::istringstream cs(coeffs);
        std::vector<BigInt> c;
        std::string word;
        while (cs >> word) c.emplace_back(word);
        if (static_cast<int>(c.size()) != deg + 1)
            throw parse_error("coefficient count mismatch at n=" + std::to_string(n));
        t.polys[n] = IntPoly(std::move(c));
        if (t.polys[n].degree() != deg)
            throw parse_error("trailing zero coefficient at n=" + std::to_string(n));
        t.M[n] = mn;
    }
    return t;
}

void write_poly_table_file(const std::string& path, const std::string& kind,
                           const std::vector<IntPoly>& polys, const std::vector<int>& m) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    write_poly_table(os, kind, polys, m);
    if (!os) throw std::runtime_error("write failed: " + path);
}

TableFile read_poly_table_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open table: " + path);
    return read_poly_table(is);
}

std::string rational_str(const BigRat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

void write_verify_report(std::ostream& os, const std::vector<NonnegReport>& reports,
                         const std::vector<BigRat>& r_grid, int nmax) {
    os << "defexp-verify v1 nmax=" << nmax << " rgrid=";
    for (size_t i = 0; i < r_grid.size(); ++i) os << (i ? "," : "") << rational_str(r_grid[i]);
    os << "\n";
    bool all = true;
    for (const NonnegReport& r : reports) {
        os << "n=" << r.n << " kind=" << (r.hat ? "PHAT" : "P")
           << " lagrange=" << rational_str(r.lagrange);
        for (const auto& [rr, b] : r.nu_r) os << " nu_" << rational_str(rr) << "=" << rational_str(b);
        os << " bound=" << rational_str(r.best) << " sweep=" << r.sweep_limit
           << " nonneg=" << (r.all_nonnegative ? "yes" : "no");
        if (r.first_negative_k)
            os << " negative_k=" << *r.first_negative_k
               << " value=" << r.first_negative_value.get_str();
        os << "\n";
        all = all && r.all_nonnegative;
    }
    os << "summary all_nonneg=" << (all ? "yes" : "no") << "\n";
}

void write_root_report(std::ostream& os, const std::vector<RootCertificate>& certs, int digits) {
    os << "defexp-roots v1 digits=" << digits << "\n";
    for (const RootCertificate& c : certs) {
        os << "n=" << c.n << " kind=" << (c.hat ? "PHAT" : "P") << " count=" << c.count << "\n";
        for (int i = 0; i < c.count; ++i) {
            os << "root interval=" << rational_str(c.intervals[i].first) << ","
               << rational_str(c.intervals[i].second) << " value=" << c.decimals[i] << "\n";
        }
    }
}

void write_sign_matrix_txt(std::ostream& os, const SignMatrix& m) {
    for (size_t n = 1; n < m.rows.size(); ++n) {
        const auto& row = m.rows[n];
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) os << ' ';
            os << (row[i] > 0 ? '+' : row[i] < 0 ? '-' : '0');
        }
        os << "\n";
    }
}

void write_sign_matrix_pgm(std::ostream& os, const SignMatrix& m) {
    const int width = static_cast<int>(m.rows.size()) - 1; // n on x
    size_t height = 0;
    for (const auto& row : m.rows) height = std::max(height, row.size());
    os << "P5\n" << width << " " << height << "\n255\n";
    // top scanline = largest i, so the degree profile rises left to right
    for (size_t yi = 0; yi < height; ++yi) {
        size_t i = height - 1 - yi;
        for (int n = 1; n <= width; ++n) {
            const auto& row = m.rows[n];
            unsigned char px = 128;
            if (i < row.size()) px = row[i] > 0 ? 255 : row[i] < 0 ? 0 : 128;
            os.put(static_cast<char>(px));
        }
    }
}

void write_digits_csv(std::ostream& os, const std::vector<std::vector<int>>& m) {
    for (size_t n = 1; n < m.size(); ++n) {
        const auto& row = m[n];
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            if (row[i] > 0) os << row[i];
        }
        os << "\n";
    }
}

} // namespace defexp
