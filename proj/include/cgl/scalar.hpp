#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace cgl {

using Rational = mpq_class;

// Finite sum  sum_i c_i q^(low + i)  with rational coefficients.
// Stored trimmed: the first and last coefficients are nonzero; zero is the
// empty coefficient list.
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(const Rational& c, int exponent = 0);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1 && (c_.empty() || low_ == 0); }
    int low() const { return low_; }
    int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
    std::size_t size() const { return c_.size(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int exponent) const;
    const Rational& leading() const { return c_.back(); }

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent& operator*=(const Rational& s);
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    friend bool operator==(const Laurent& a, const Laurent& b) {
        return a.low_ == b.low_ && a.c_ == b.c_;
    }

    Laurent shifted(int by) const;
    Rational eval(const Rational& q) const;

    // Internal constructor from raw data; trims.
    static Laurent from_coeffs(std::vector<Rational> c, int low);

private:
    void trim();
    std::vector<Rational> c_;
    int low_ = 0;
};

// Element of the field Q(q). Canonical form num/den with den a monic
// polynomial having nonzero constant term and gcd(num, den) = 1, so that
// equality is structural.
class Scalar {
public:
    Scalar();
    Scalar(long v);  // NOLINT(google-explicit-constructor)
    Scalar(int v) : Scalar(static_cast<long>(v)) {}  // NOLINT
    Scalar(const Rational& v);  // NOLINT
    static Scalar q_power(int exponent);
    static Scalar from_laurent(Laurent p);
    static Scalar fraction(const Laurent& num, const Laurent& den);

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_sign_valued() const;
    bool is_rational() const { return den_one() && num_.is_constant(); }
    bool is_laurent() const { return den_one(); }
    Rational to_rational() const;
    int sign_of_rational() const;

    Scalar inverse() const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Multiply by sign * q^e without a gcd pass.
    Scalar times_monomial(int sign, int e) const;

    Rational eval(const Rational& q) const;

    // Integer-coefficient rendering "p(q)/r(q)"; parse() accepts it back.
    std::string str() const;
    static Scalar parse(std::string_view text);

private:
    bool den_one() const { return den_.size() == 1; }
    void normalize();
    Laurent num_;
    Laurent den_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// a / b in Q[q, 1/q]; throws DomainError unless b divides a.
Laurent divide_exact(const Laurent& a, const Laurent& b);

}  // namespace cgl
