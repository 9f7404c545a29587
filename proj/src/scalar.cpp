#include "cgl/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "cgl/error.hpp"

namespace cgl {

// ---------------------------------------------------------------- Laurent

Laurent::Laurent(const Rational& c, int exponent) {
    if (c != 0) {
        c_.push_back(c);
        low_ = exponent;
    }
}

Laurent Laurent::from_coeffs(std::vector<Rational> c, int low) {
    Laurent p;
    p.c_ = std::move(c);
    p.low_ = low;
    p.trim();
    return p;
}

void Laurent::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead == c_.size()) {
        c_.clear();
        low_ = 0;
        return;
    }
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
        low_ += static_cast<int>(lead);
    }
}

Rational Laurent::coeff(int exponent) const {
    if (c_.empty() || exponent < low_ || exponent > high()) return 0;
    return c_[static_cast<std::size_t>(exponent - low_)];
}

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    int lo = std::min(low_, o.low_);
    int hi = std::max(high(), o.high());
    std::vector<Rational> c(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < c_.size(); ++i) c[static_cast<std::size_t>(low_ - lo) + i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[static_cast<std::size_t>(o.low_ - lo) + i] += o.c_[i];
    c_ = std::move(c);
    low_ = lo;
    trim();
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent& Laurent::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        low_ = 0;
        return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Laurent::from_coeffs(std::move(c), a.low_ + b.low_);
}

Laurent Laurent::shifted(int by) const {
    Laurent r = *this;
    if (!r.is_zero()) r.low_ += by;
    return r;
}

Rational Laurent::eval(const Rational& q) const {
    if (c_.empty()) return 0;
    if (q == 0 && low_ < 0) throw DomainError("Laurent polynomial has a pole at q = 0");
    Rational acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * q + c_[i];
    Rational p = 1;
    Rational base = low_ >= 0 ? q : Rational(1) / q;
    for (int k = 0; k < std::abs(low_); ++k) p *= base;
    return acc * p;
}

// ------------------------------------------------- polynomial helpers

namespace {

using Poly = std::vector<Rational>;  // index = power of q

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Long division a = qt * b + rem.
void poly_divmod(const Poly& a, const Poly& b, Poly& qt, Poly& rem) {
    rem = a;
    poly_trim(rem);
    qt.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, Rational(0));
    const Rational& lb = b.back();
    while (rem.size() >= b.size() && !rem.empty()) {
        std::size_t shift = rem.size() - b.size();
        Rational f = rem.back() / lb;
        qt[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= f * b[i];
        poly_trim(rem);
    }
    poly_trim(qt);
}

Poly poly_gcd(Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly qt, r;
        poly_divmod(a, b, qt, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational l = a.back();
        for (auto& x : a) x /= l;
    }
    return a;
}

Poly as_poly(const Laurent& p) { return p.coeffs(); }

}  // namespace

Laurent divide_exact(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) throw DomainError("division by zero in Q[q, 1/q]");
    if (a.is_zero()) return a;
    Poly qt, r;
    poly_divmod(as_poly(a), as_poly(b), qt, r);
    if (!r.empty()) throw DomainError("inexact Laurent division");
    return Laurent::from_coeffs(std::move(qt), a.low() - b.low());
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar() : den_(Rational(1)) {}
Scalar::Scalar(long v) : num_(Rational(v)), den_(Rational(1)) {}
Scalar::Scalar(const Rational& v) : num_(v), den_(Rational(1)) {}

Scalar Scalar::q_power(int exponent) {
    Scalar s;
    s.num_ = Laurent(Rational(1), exponent);
    return s;
}

Scalar Scalar::from_laurent(Laurent p) {
    Scalar s;
    s.num_ = std::move(p);
    return s;
}

Scalar Scalar::fraction(const Laurent& num, const Laurent& den) {
    if (den.is_zero()) throw DomainError("division by zero in Q(q)");
    Scalar s;
    s.num_ = num;
    s.den_ = den;
    s.normalize();
    return s;
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = Laurent(Rational(1));
        return;
    }
    // Move any power of q out of the denominator.
    if (den_.low() != 0) {
        num_ = num_.shifted(-den_.low());
        den_ = den_.shifted(-den_.low());
    }
    if (den_.size() > 1) {
        Poly g = poly_gcd(as_poly(num_), as_poly(den_));
        if (g.size() > 1) {
            Poly qt, r;
            poly_divmod(as_poly(num_), g, qt, r);
            num_ = Laurent::from_coeffs(std::move(qt), num_.low());
            poly_divmod(as_poly(den_), g, qt, r);
            den_ = Laurent::from_coeffs(std::move(qt), 0);
        }
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

bool Scalar::is_one() const { return den_one() && num_.is_constant() && !num_.is_zero() && num_.leading() == 1; }

bool Scalar::is_sign_valued() const {
    return den_one() && num_.is_constant() && !num_.is_zero() &&
           (num_.leading() == 1 || num_.leading() == -1);
}

Rational Scalar::to_rational() const {
    if (!is_rational()) throw DomainError("scalar " + str() + " is not a rational number");
    return num_.is_zero() ? Rational(0) : num_.leading();
}

int Scalar::sign_of_rational() const { return sgn(to_rational()); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw DomainError("division by zero in Q(q)");
    if (den_one() && num_.size() == 1) {
        Scalar s;
        s.num_ = Laurent(Rational(1) / num_.leading(), -num_.low());
        return s;
    }
    return fraction(den_, num_);
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    s.num_ = -s.num_;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_one() && o.den_one()) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
        normalize();
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = Scalar();
    num_ = num_ * o.num_;
    if (den_one() && o.den_one()) return *this;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::times_monomial(int sign, int e) const {
    Scalar s = *this;
    s.num_ = s.num_.shifted(e);
    if (sign < 0) s.num_ = -s.num_;
    return s;
}

Rational Scalar::eval(const Rational& q) const {
    Rational d = den_.eval(q);
    if (d == 0) throw DomainError("scalar " + str() + " has a pole at the requested q");
    return num_.eval(q) / d;
}

// ---------------------------------------------------------------- text

namespace {

mpz_class lcm_of_denominators(const Laurent& p, mpz_class acc) {
    for (const auto& c : p.coeffs()) {
        if (c == 0) continue;
        mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), c.get_den_mpz_t());
    }
    return acc;
}

void gcd_of_numerators(const Laurent& p, mpz_class& acc) {
    for (const auto& c : p.coeffs()) {
        if (c == 0) continue;
        mpz_gcd(acc.get_mpz_t(), acc.get_mpz_t(), c.get_num_mpz_t());
    }
}

std::string render(const Laurent& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = p.high(); e >= p.low(); --e) {
        Rational c = p.coeff(e);
        if (c == 0) continue;
        mpz_class n = c.get_num();
        if (n < 0) {
            os << '-';
            n = -n;
        } else if (!first) {
            os << '+';
        }
        first = false;
        if (e == 0) {
            os << n;
            continue;
        }
        if (n != 1) os << n << '*';
        os << 'q';
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

std::size_t term_count(const Laurent& p) {
    return static_cast<std::size_t>(std::count_if(p.coeffs().begin(), p.coeffs().end(),
                                                  [](const Rational& c) { return c != 0; }));
}

class ScalarParser {
public:
    explicit ScalarParser(std::string_view s) : s_(s) {}

    Scalar parse() {
        Scalar v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("scalar \"" + std::string(s_) + "\": " + what + " at offset " +
                         std::to_string(pos_));
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }
    Scalar term() {
        Scalar v = unary();
        for (;;) {
            if (eat('*')) {
                v *= unary();
            } else if (eat('/')) {
                Scalar d = unary();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }
    Scalar unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    Scalar power() {
        Scalar base = primary();
        if (!eat('^')) return base;
        bool neg = eat('-');
        long e = integer();
        if (neg) e = -e;
        if (base.is_zero() && e < 0) fail("zero to a negative power");
        Scalar r(1);
        Scalar b = e < 0 ? base.inverse() : base;
        for (long k = 0; k < std::labs(e); ++k) r *= b;
        return r;
    }
    long integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        if (pos_ - start > 9) fail("exponent too large");
        return std::stol(std::string(s_.substr(start, pos_ - start)));
    }
    Scalar primary() {
        skip();
        if (eat('(')) {
            Scalar v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (eat('q')) return Scalar::q_power(1);
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected number, 'q' or '('");
        return Scalar(Rational(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string Scalar::str() const {
    if (is_zero()) return "0";
    mpz_class l = lcm_of_denominators(den_, lcm_of_denominators(num_, mpz_class(1)));
    Laurent n = num_;
    Laurent d = den_;
    n *= Rational(l);
    d *= Rational(l);
    mpz_class g = 0;
    gcd_of_numerators(n, g);
    gcd_of_numerators(d, g);
    if (g != 1 && g != 0) {
        n *= Rational(mpz_class(1), g);
        d *= Rational(mpz_class(1), g);
    }
    std::string ns = render(n);
    if (d.is_constant() && d.leading() == 1) return ns;
    std::string ds = render(d);
    if (term_count(n) > 1) ns = "(" + ns + ")";
    if (term_count(d) > 1) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

Scalar Scalar::parse(std::string_view text) { return ScalarParser(text).parse(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace cgl
