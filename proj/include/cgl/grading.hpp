#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cgl/scalar.hpp"

namespace cgl {

// The group Z^k (+) Z_2^l.
struct GradingGroup {
    int free_rank = 0;
    int torsion2_rank = 0;

    int rank() const { return free_rank + torsion2_rank; }
    friend bool operator==(const GradingGroup&, const GradingGroup&) = default;
};

// Element of a GradingGroup: the first free_rank coordinates are integers,
// the remaining torsion2_rank coordinates are kept reduced to {0, 1}.
class Degree {
public:
    Degree() = default;
    Degree(const GradingGroup& g, std::vector<std::int64_t> coords);
    static Degree zero(const GradingGroup& g);

    const GradingGroup& group() const { return g_; }
    const std::vector<std::int64_t>& coords() const { return x_; }
    std::int64_t operator[](std::size_t i) const { return x_[i]; }
    bool is_zero() const;

    Degree operator-() const;
    Degree& operator+=(const Degree& o);
    Degree& operator-=(const Degree& o);
    friend Degree operator+(Degree a, const Degree& b) { return a += b; }
    friend Degree operator-(Degree a, const Degree& b) { return a -= b; }
    friend bool operator==(const Degree& a, const Degree& b) { return a.g_ == b.g_ && a.x_ == b.x_; }
    friend bool operator<(const Degree& a, const Degree& b) { return a.x_ < b.x_; }

    std::string str() const;

private:
    void reduce();
    GradingGroup g_;
    std::vector<std::int64_t> x_;
};

// A value sign * q^exponent, the form every omega(a, b) takes.
struct OmegaValue {
    int sign = 1;
    std::int64_t qexp = 0;

    Scalar scalar() const;
    OmegaValue inverse() const { return {sign, -qexp}; }
    friend OmegaValue operator*(OmegaValue a, OmegaValue b) { return {a.sign * b.sign, a.qexp + b.qexp}; }
    friend bool operator==(const OmegaValue&, const OmegaValue&) = default;
    bool is_one() const { return sign == 1 && qexp == 0; }
};

// The bicharacter omega(a, b) = (-1)^(a^T S b) q^(a^T B b) with S symmetric
// (read mod 2) and B skew with no entries on torsion coordinates.
class CommutativeFactor {
public:
    CommutativeFactor() = default;
    CommutativeFactor(GradingGroup g, std::vector<std::vector<std::int64_t>> sign_form,
                      std::vector<std::vector<std::int64_t>> exp_form);

    const GradingGroup& group() const { return g_; }
    const std::vector<std::vector<std::int64_t>>& sign_form() const { return s_; }
    const std::vector<std::vector<std::int64_t>>& exp_form() const { return b_; }

    OmegaValue value(const Degree& a, const Degree& b) const;
    Scalar omega_eval(const Degree& a, const Degree& b) const { return value(a, b).scalar(); }
    int omega_parity(const Degree& a) const;
    bool has_unit_modulus_property() const;

    friend bool operator==(const CommutativeFactor& a, const CommutativeFactor& b) {
        return a.g_ == b.g_ && a.s_ == b.s_ && a.b_ == b.b_;
    }

private:
    void check_degree(const Degree& a) const;
    GradingGroup g_;
    std::vector<std::vector<std::int64_t>> s_;
    std::vector<std::vector<std::int64_t>> b_;
};

}  // namespace cgl
