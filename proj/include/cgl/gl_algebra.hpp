#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cgl/scalar.hpp"
#include "cgl/space.hpp"

namespace cgl {

// Sparse Scalar-linear combination of matrix units E_ab of gl(V).
class GlElement {
public:
    using Key = std::pair<int, int>;

    explicit GlElement(SpacePtr space);
    static GlElement unit(SpacePtr space, int a, int b, const Scalar& c = Scalar(1));

    const SpacePtr& space() const { return space_; }
    const std::map<Key, Scalar>& terms() const { return terms_; }
    Scalar coeff(int a, int b) const;
    bool is_zero() const { return terms_.empty(); }

    void add(int a, int b, const Scalar& c);
    // Degree if every term shares gamma_a - gamma_b; nullopt otherwise.
    // The zero element is reported homogeneous of degree zero.
    std::optional<Degree> homogeneous_degree() const;
    // Split into homogeneous parts, keyed by degree coordinates.
    std::vector<GlElement> homogeneous_parts() const;

    GlElement& operator+=(const GlElement& o);
    GlElement& operator-=(const GlElement& o);
    GlElement& operator*=(const Scalar& s);
    friend GlElement operator+(GlElement a, const GlElement& b) { return a += b; }
    friend GlElement operator-(GlElement a, const GlElement& b) { return a -= b; }
    friend GlElement operator*(const Scalar& s, GlElement a) { return a *= s; }
    friend bool operator==(const GlElement& a, const GlElement& b) { return a.terms_ == b.terms_; }

    std::string str() const;

private:
    void check_index(int a, int b) const;
    SpacePtr space_;
    std::map<Key, Scalar> terms_;
};

void require_same_space(const GlElement& x, const GlElement& y);

// omega(gamma_a - gamma_b, gamma_c - gamma_d) from the cached table.
OmegaValue omega_units(const GradedSpace& v, int a, int b, int c, int d);

GlElement bracket(const GlElement& x, const GlElement& y);
// Ordinary matrix product XY.
GlElement matrix_product(const GlElement& x, const GlElement& y);
// [X,Y] computed as XY - omega(dX,dY) YX; X and Y must be homogeneous.
GlElement bracket_via_products(const GlElement& x, const GlElement& y);
// [X,[Y,Z]] - [[X,Y],Z] - omega(dX,dY)[Y,[X,Z]].
GlElement jacobi_defect(const GlElement& x, const GlElement& y, const GlElement& z);
// [X,Y] + omega(dX,dY)[Y,X].
GlElement skew_defect(const GlElement& x, const GlElement& y);

Scalar supertrace(const GlElement& x);
Scalar bilinear_form(const GlElement& x, const GlElement& y);

// Rational vector in the epsilon basis of h*.
struct Weight {
    std::vector<Rational> c;

    Weight() = default;
    explicit Weight(std::size_t n) : c(n, Rational(0)) {}
    explicit Weight(std::vector<Rational> v) : c(std::move(v)) {}
    static Weight from_ints(const std::vector<long>& v);

    std::size_t size() const { return c.size(); }
    Rational& operator[](std::size_t i) { return c[i]; }
    const Rational& operator[](std::size_t i) const { return c[i]; }

    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    Weight& operator*=(const Rational& s);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(const Rational& s, Weight a) { return a *= s; }
    friend bool operator==(const Weight& a, const Weight& b) { return a.c == b.c; }
    friend bool operator<(const Weight& a, const Weight& b) { return a.c < b.c; }

    std::string str() const;
};

Weight epsilon(const GradedSpace& v, int a);
Rational weight_inner(const GradedSpace& v, const Weight& l, const Weight& m);
Weight rho(const GradedSpace& v);

struct PositiveRoots {
    std::vector<Weight> even;  // Phi_0^+
    std::vector<Weight> odd;   // Phi_1^+
    std::vector<std::pair<int, int>> even_pairs;
    std::vector<std::pair<int, int>> odd_pairs;
};
PositiveRoots positive_roots(const GradedSpace& v);

// Orbit under Sym(M+) x Sym(M-) acting on the two coordinate blocks.
std::set<Weight> weyl_orbit(const GradedSpace& v, const Weight& l);

// 2^(M+ M-).
std::uint64_t pbw_dimension_nilradical(const GradedSpace& v);

}  // namespace cgl
