#include "defexp/int_poly.hpp"

#include <algorithm>
#include <sstream>

namespace defexp {

namespace {
const BigInt kZero = 0;
}

BigRat make_rat(BigInt num, BigInt den) {
    BigRat r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

int decimal_digits(const BigInt& z) {
    if (z == 0) return 0;
    // mpz_sizeinbase(.,10) may overshoot by one; the string length is exact.
    return static_cast<int>(mpz_class(abs(z)).get_str().size());
}

IntPoly::IntPoly(BigInt constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> ascending) {
    c_.assign(ascending.begin(), ascending.end());
    normalize();
}

IntPoly IntPoly::monomial(BigInt coeff, int power) {
    IntPoly p;
    if (coeff != 0) {
        p.c_.assign(power + 1, BigInt(0));
        p.c_[power] = std::move(coeff);
    }
    return p;
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

const BigInt& IntPoly::leading() const { return c_.back(); }

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly r(*this);
    r += o;
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    IntPoly r(*this);
    r -= o;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

IntPoly IntPoly::operator*(const IntPoly& o) const { return poly_mul(*this, o); }

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    std::vector<BigInt> r(ac.size() + bc.size() - 1, BigInt(0));
    for (size_t i = 0; i < ac.size(); ++i) {
        if (ac[i] == 0) continue;
        for (size_t j = 0; j < bc.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), ac[i].get_mpz_t(), bc[j].get_mpz_t());
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::scaled(const BigInt& s) const {
    if (s == 0) return IntPoly();
    IntPoly r(*this);
    for (auto& x : r.c_) x *= s;
    return r;
}

IntPoly IntPoly::times_power(int p) const {
    if (is_zero()) return IntPoly();
    IntPoly r;
    r.c_.assign(p, BigInt(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

BigRat IntPoly::eval(const BigRat& x) const {
    BigRat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

int IntPoly::sign_at(const BigInt& num, const BigInt& den) const {
    // value * den^deg = sum c_i num^i den^(deg-i), an integer of the same sign.
    if (is_zero()) return 0;
    BigInt acc = c_.back();
    BigInt dpow = 1;
    for (int i = degree() - 1; i >= 0; --i) {
        dpow *= den;
        acc *= num;
        mpz_addmul(acc.get_mpz_t(), c_[i].get_mpz_t(), dpow.get_mpz_t());
    }
    return sgn(acc);
}

IntPoly IntPoly::derivative() const {
    if (degree() < 1) return IntPoly();
    std::vector<BigInt> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * BigInt(static_cast<long>(i));
    return IntPoly(std::move(r));
}

IntPoly IntPoly::shifted_by_one() const {
    // Horner in (k+1): acc <- acc*(k+1) + c_i.
    IntPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        IntPoly next;
        next.c_.assign(acc.c_.size() + 1, BigInt(0));
        for (size_t i = 0; i < acc.c_.size(); ++i) {
            next.c_[i + 1] += acc.c_[i];
            next.c_[i] += acc.c_[i];
        }
        next.c_[0] += *it;
        next.normalize();
        acc = std::move(next);
    }
    return acc;
}

BigInt IntPoly::content() const {
    BigInt g = 0;
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive() const {
    if (is_zero()) return IntPoly();
    BigInt g = content();
    if (leading() < 0) g = -g;
    IntPoly r(*this);
    for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return r;
}

IntPoly poly_exact_div(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw NotDivisible("division by zero polynomial");
    if (a.is_zero()) return IntPoly();
    int da = a.degree(), db = b.degree();
    if (da < db) throw NotDivisible("degree of dividend below divisor");
    std::vector<BigInt> rem = a.coeffs();
    std::vector<BigInt> q(da - db + 1, BigInt(0));
    const auto& bc = b.coeffs();
    int dr = da;
    while (dr >= db) {
        if (rem[dr] == 0) {
            --dr;
            continue;
        }
        if (!mpz_divisible_p(rem[dr].get_mpz_t(), bc[db].get_mpz_t()))
            throw NotDivisible("leading coefficient not divisible");
        BigInt f;
        mpz_divexact(f.get_mpz_t(), rem[dr].get_mpz_t(), bc[db].get_mpz_t());
        int e = dr - db;
        q[e] = f;
        for (int j = 0; j <= db; ++j)
            mpz_submul(rem[e + j].get_mpz_t(), f.get_mpz_t(), bc[j].get_mpz_t());
        --dr;
    }
    for (const auto& x : rem)
        if (x != 0) throw NotDivisible("nonzero remainder");
    return IntPoly(std::move(q));
}

IntPoly signed_pseudo_rem(const IntPoly& a, const IntPoly& b) {
    int da = a.degree(), db = b.degree();
    if (da < db) return a;
    // Multiply by lc(b)^(da-db+1); if that factor is negative, flip the result
    // so the overall scaling stays positive.
    IntPoly r = a;
    const BigInt& lb = b.leading();
    int steps = da - db + 1;
    for (int s = 0; s < steps; ++s) {
        int dr = r.degree();
        if (dr < db) {
            // degree already dropped; keep scaling so the multiplier is lb^steps
            r = r.scaled(lb);
            continue;
        }
        BigInt f = r.coeffs()[dr];
        std::vector<BigInt> t = r.coeffs();
        for (auto& x : t) x *= lb;
        for (int j = 0; j <= db; ++j)
            mpz_submul(t[dr - db + j].get_mpz_t(), f.get_mpz_t(), b.coeffs()[j].get_mpz_t());
        r = IntPoly(std::move(t));
    }
    if (steps % 2 == 1 && lb < 0) r = -r;
    return r;
}

IntPoly poly_gcd(IntPoly a, IntPoly b) {
    if (a.is_zero()) return b.primitive();
    if (b.is_zero()) return a.primitive();
    a = a.primitive();
    b = b.primitive();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = signed_pseudo_rem(a, b);
        a = std::move(b);
        b = r.primitive();
    }
    return a.primitive();
}

IntPoly poly_squarefree(const IntPoly& p) {
    if (p.degree() < 1) return p;
    return poly_exact_div(p, poly_gcd(p, p.derivative()));
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& ci = c_[i];
        if (ci == 0) continue;
        if (!first) os << (ci > 0 ? " + " : " - ");
        else if (ci < 0) os << "-";
        first = false;
        BigInt a = abs(ci);
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace defexp
