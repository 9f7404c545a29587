#pragma once

#include <map>
#include <utility>
#include <vector>

#include "cgl/gl_algebra.hpp"
#include "cgl/symalg.hpp"

namespace cgl {

// Weyl algebra on N copies of V. Generator ids: x_{a,r} = a N + r and
// d_{a,r} = D + a N + r with D = dim V * N. A normal monomial is an exponent
// vector over all 2D generators, read as the x block then the d block, each
// in ascending id.
class WeylAlgebra {
public:
    using Element = std::map<Monomial, Scalar>;

    WeylAlgebra(SpacePtr space, int copies);

    const SpacePtr& space() const { return space_; }
    int copies() const { return n_; }
    int half() const { return d_; }
    int ngens() const { return 2 * d_; }
    int x_id(int a, int r) const { return a * n_ + r; }
    int d_id(int a, int r) const { return d_ + a * n_ + r; }
    bool is_x(int g) const { return g < d_; }
    int basis_index(int g) const { return (g % d_) / n_; }
    const Degree& degree(int g) const { return deg_[static_cast<std::size_t>(g)]; }
    bool is_odd(int g) const { return space_->m_plus() <= basis_index(g); }
    OmegaValue omega_gen(int g, int h) const { return tab_[static_cast<std::size_t>(g * ngens() + h)]; }

    Element one() const;
    Element gen(int g) const;
    Degree degree_of(const Monomial& m) const;
    // Degree if all terms agree; nullopt otherwise (zero counts as degree 0).
    std::optional<Degree> homogeneous_degree(const Element& u) const;

    // u * g in normal form.
    Element times_generator(const Element& u, int g) const;
    Element multiply(const Element& u, const Element& v) const;
    // uv - omega(du, dv) vu for homogeneous u, v.
    Element bracket(const Element& u, const Element& v) const;

    // Generators as a sequence of ids in normal order.
    std::vector<int> expand(const Monomial& m) const;

    // The x-only part as a symmetric algebra, used for Fock vectors.
    const SymAlgebra& fock_algebra() const { return fock_; }
    const SymAlgebra& dual_fock_algebra() const { return dual_fock_; }

private:
    SpacePtr space_;
    int n_;
    int d_;
    std::vector<Degree> deg_;
    std::vector<OmegaValue> tab_;
    SymAlgebra fock_;
    SymAlgebra dual_fock_;
};

WeylAlgebra::Element scale(const WeylAlgebra::Element& u, const Scalar& c);
WeylAlgebra::Element operator+(WeylAlgebra::Element a, const WeylAlgebra::Element& b);
WeylAlgebra::Element operator-(WeylAlgebra::Element a, const WeylAlgebra::Element& b);

// Fock vectors live in the x-only symmetric algebra.
using FockVector = SymPoly;

// A single generator on the Fock space: x by multiplication, d as the
// omega-derivation of degree -gamma with d_{a,r}(x_{b,s}) = delta.
FockVector fock_generator(const WeylAlgebra& w, int g, const FockVector& f);
// Normal monomials act generator by generator, rightmost first.
FockVector fock_apply(const WeylAlgebra& w, const WeylAlgebra::Element& u, const FockVector& f);
// Second route: normal-order u * f in the Weyl algebra and keep the terms
// free of d, which is u f modulo the left ideal annihilating 1.
FockVector fock_apply_by_normal_order(const WeylAlgebra& w, const WeylAlgebra::Element& u, const FockVector& f);

// Dual Fock space S(Vbar^N): polynomials in the d generators, which act by
// multiplication while x_{b,s} acts as the derivation of degree gamma_b with
// x_{b,s}(d_{a,r}) = -omega(gamma_a, gamma_a) delta.
using DualFockVector = SymPoly;
DualFockVector dual_fock_generator(const WeylAlgebra& w, int g, const DualFockVector& f);

struct DualPairGenerators {
    // e_gl_n[r][s] = E^{rs} = sum_a x_{a,r} d_{a,s}
    std::vector<std::vector<WeylAlgebra::Element>> e_gl_n;
    // e_gl_v[a][b] = sum_r x_{a,r} d_{b,r}
    std::vector<std::vector<WeylAlgebra::Element>> e_gl_v;
};
DualPairGenerators dual_pair_generators(const WeylAlgebra& w);

// Image of X under E_ab -> e_gl_v[a][b].
WeylAlgebra::Element gl_to_weyl(const DualPairGenerators& g, const GlElement& x);

struct DualPairReport {
    std::size_t gl_n_checked = 0, gl_n_failed = 0;
    std::size_t gl_v_checked = 0, gl_v_failed = 0;
    std::size_t commutant_checked = 0, commutant_failed = 0;
    bool ok() const { return gl_n_failed == 0 && gl_v_failed == 0 && commutant_failed == 0; }
};
// Exhaustive check of the gl_N relations, the gl(V) relations of the
// e_gl_v, and [E^{rs}, e_gl_v[a][b]] = 0.
DualPairReport check_dual_pair(const WeylAlgebra& w);

struct WeylRelationReport {
    std::size_t checked = 0, failed = 0;
    bool ok() const { return failed == 0; }
};
// Applies every defining relation of the Weyl algebra to every Fock
// monomial of degree <= max_degree through fock_generator.
WeylRelationReport check_fock_relations(const WeylAlgebra& w, int max_degree);

struct Level2Report {
    std::size_t invariant_dim = 0;
    std::size_t expected_dim = 0;  // (dim V)^2 + 1
    bool generators_invariant = false;
    bool generators_span = false;
    bool ok() const { return invariant_dim == expected_dim && generators_invariant && generators_span; }
};
// gl_N invariants among Weyl elements of filtration degree <= 2.
Level2Report check_level2_invariants(const WeylAlgebra& w);

}  // namespace cgl
