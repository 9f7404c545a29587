#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cgl/grading.hpp"
#include "cgl/scalar.hpp"

namespace cgl {

using Monomial = std::vector<int>;  // exponent of each generator
using SymPoly = std::map<Monomial, Scalar>;

void add_term(SymPoly& p, const Monomial& m, const Scalar& c);

// The omega-symmetric algebra on homogeneous generators g_0, g_1, ...:
// g_i g_j = omega(d_i, d_j) g_j g_i. Monomials are stored in ascending
// generator order and odd generators square to zero.
class SymAlgebra {
public:
    SymAlgebra(CommutativeFactor factor, std::vector<Degree> generators);

    int ngens() const { return static_cast<int>(deg_.size()); }
    const CommutativeFactor& factor() const { return factor_; }
    const Degree& degree(int g) const { return deg_[static_cast<std::size_t>(g)]; }
    bool is_odd(int g) const { return odd_[static_cast<std::size_t>(g)]; }

    Monomial unit() const { return Monomial(deg_.size(), 0); }
    Monomial generator(int g) const;
    int total_degree(const Monomial& m) const;
    Degree degree_of(const Monomial& m) const;

    // Normal form of m1 * m2 as a coefficient sign*q^e and a monomial;
    // nullopt when the product vanishes.
    std::optional<std::pair<OmegaValue, Monomial>> mono_mul(const Monomial& a, const Monomial& b) const;
    SymPoly multiply(const SymPoly& a, const SymPoly& b) const;

    // Omega-derivation of degree delta determined by its values on
    // generators: D(uv) = D(u)v + omega(delta, d(u)) u D(v).
    using GeneratorMap = std::function<SymPoly(int)>;
    SymPoly apply_derivation(const SymPoly& f, const Degree& delta, const GeneratorMap& on_gen) const;

    // Normal monomials of total degree d in the generators [begin, end).
    std::vector<Monomial> monomials(int d, int begin, int end) const;
    std::vector<Monomial> monomials(int d) const { return monomials(d, 0, ngens()); }

private:
    CommutativeFactor factor_;
    std::vector<Degree> deg_;
    std::vector<bool> odd_;
    std::vector<OmegaValue> tab_;
};

}  // namespace cgl
