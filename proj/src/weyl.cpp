#include "cgl/weyl.hpp"

#include <algorithm>
#include <tuple>

#include "cgl/error.hpp"
#include "cgl/linalg.hpp"

namespace cgl {

namespace {

std::vector<Degree> generator_degrees(const GradedSpace& v, int n) {
    std::vector<Degree> deg;
    for (int a = 0; a < v.dim(); ++a)
        for (int r = 0; r < n; ++r) deg.push_back(v.degree(a));
    for (int a = 0; a < v.dim(); ++a)
        for (int r = 0; r < n; ++r) deg.push_back(-v.degree(a));
    return deg;
}

OmegaValue power(OmegaValue w, int e) {
    OmegaValue out;
    if ((e & 1) && w.sign < 0) out.sign = -1;
    out.qexp = w.qexp * e;
    return out;
}

std::vector<Degree> slice(const std::vector<Degree>& d, std::size_t lo, std::size_t hi) {
    return {d.begin() + static_cast<std::ptrdiff_t>(lo), d.begin() + static_cast<std::ptrdiff_t>(hi)};
}

}  // namespace

WeylAlgebra::WeylAlgebra(SpacePtr space, int copies)
    : space_(std::move(space)),
      n_(copies),
      d_(space_ ? space_->dim() * copies : 0),
      deg_(space_ ? generator_degrees(*space_, copies) : std::vector<Degree>{}),
      fock_(space_ ? space_->factor() : CommutativeFactor(), slice(deg_, 0, static_cast<std::size_t>(d_))),
      dual_fock_(space_ ? space_->factor() : CommutativeFactor(),
                 slice(deg_, static_cast<std::size_t>(d_), static_cast<std::size_t>(2 * d_))) {
    if (!space_) throw PreconditionError("WeylAlgebra needs a space");
    if (copies < 1) throw DomainError("number of copies must be positive");
    const int g = ngens();
    tab_.resize(static_cast<std::size_t>(g * g));
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            tab_[static_cast<std::size_t>(i * g + j)] = space_->factor().value(deg_[static_cast<std::size_t>(i)], deg_[static_cast<std::size_t>(j)]);
}

WeylAlgebra::Element scale(const WeylAlgebra::Element& u, const Scalar& c) {
    WeylAlgebra::Element out;
    if (c.is_zero()) return out;
    for (const auto& [m, x] : u) out.emplace(m, x * c);
    return out;
}

WeylAlgebra::Element operator+(WeylAlgebra::Element a, const WeylAlgebra::Element& b) {
    for (const auto& [m, c] : b) add_term(a, m, c);
    return a;
}

WeylAlgebra::Element operator-(WeylAlgebra::Element a, const WeylAlgebra::Element& b) {
    for (const auto& [m, c] : b) add_term(a, m, -c);
    return a;
}

WeylAlgebra::Element WeylAlgebra::one() const { return {{Monomial(static_cast<std::size_t>(ngens()), 0), Scalar(1)}}; }

WeylAlgebra::Element WeylAlgebra::gen(int g) const {
    if (g < 0 || g >= ngens()) throw ShapeError("Weyl generator id out of range");
    Monomial m(static_cast<std::size_t>(ngens()), 0);
    m[static_cast<std::size_t>(g)] = 1;
    return {{m, Scalar(1)}};
}

Degree WeylAlgebra::degree_of(const Monomial& m) const {
    Degree d = Degree::zero(space_->group());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (int k = 0; k < m[i]; ++k) d += deg_[i];
    return d;
}

std::optional<Degree> WeylAlgebra::homogeneous_degree(const Element& u) const {
    std::optional<Degree> d;
    for (const auto& [m, c] : u) {
        Degree x = degree_of(m);
        if (!d) d = x;
        else if (!(*d == x)) return std::nullopt;
    }
    if (!d) return Degree::zero(space_->group());
    return d;
}

WeylAlgebra::Element WeylAlgebra::times_generator(const Element& u, int g) const {
    if (g < 0 || g >= ngens()) throw ShapeError("Weyl generator id out of range");
    Element out;
    const auto gs = static_cast<std::size_t>(g);
    const bool odd_g = is_odd(g);
    for (const auto& [m, c] : u) {
        if (!is_x(g)) {
            if (odd_g && m[gs] > 0) continue;
            OmegaValue w;
            for (int v = g + 1; v < ngens(); ++v)
                if (m[static_cast<std::size_t>(v)]) w = w * power(omega_gen(v, g), m[static_cast<std::size_t>(v)]);
            Monomial mm = m;
            ++mm[gs];
            add_term(out, mm, c.times_monomial(w.sign, static_cast<int>(w.qexp)));
            continue;
        }
        // Move g left through the d block, then into the x block.
        OmegaValue through;
        for (int j = d_; j < ngens(); ++j)
            if (m[static_cast<std::size_t>(j)]) through = through * power(omega_gen(j, g), m[static_cast<std::size_t>(j)]);
        if (!(odd_g && m[gs] > 0)) {
            OmegaValue w = through;
            for (int v = g + 1; v < d_; ++v)
                if (m[static_cast<std::size_t>(v)]) w = w * power(omega_gen(v, g), m[static_cast<std::size_t>(v)]);
            Monomial mm = m;
            ++mm[gs];
            add_term(out, mm, c.times_monomial(w.sign, static_cast<int>(w.qexp)));
        }
        const int partner = g + d_;
        const int e = m[static_cast<std::size_t>(partner)];
        if (e > 0) {
            OmegaValue w;
            for (int j = partner + 1; j < ngens(); ++j)
                if (m[static_cast<std::size_t>(j)]) w = w * power(omega_gen(j, g), m[static_cast<std::size_t>(j)]);
            Monomial mm = m;
            --mm[static_cast<std::size_t>(partner)];
            const long mult = odd_g ? 1 : e;
            add_term(out, mm, (c * Scalar(mult)).times_monomial(w.sign, static_cast<int>(w.qexp)));
        }
    }
    return out;
}

std::vector<int> WeylAlgebra::expand(const Monomial& m) const {
    std::vector<int> seq;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (int k = 0; k < m[i]; ++k) seq.push_back(static_cast<int>(i));
    return seq;
}

WeylAlgebra::Element WeylAlgebra::multiply(const Element& u, const Element& v) const {
    Element out;
    for (const auto& [m, c] : v) {
        Element cur = scale(u, c);
        for (int g : expand(m)) {
            cur = times_generator(cur, g);
            if (cur.empty()) break;
        }
        out = out + cur;
    }
    return out;
}

WeylAlgebra::Element WeylAlgebra::bracket(const Element& u, const Element& v) const {
    auto du = homogeneous_degree(u);
    auto dv = homogeneous_degree(v);
    if (!du || !dv) throw PreconditionError("Weyl bracket needs homogeneous arguments");
    return multiply(u, v) - scale(multiply(v, u), space_->factor().omega_eval(*du, *dv));
}

// ---------------------------------------------------------------- Fock

FockVector fock_generator(const WeylAlgebra& w, int g, const FockVector& f) {
    const SymAlgebra& s = w.fock_algebra();
    if (w.is_x(g)) {
        FockVector gx{{s.generator(g), Scalar(1)}};
        return s.multiply(gx, f);
    }
    const int target = g - w.half();
    auto on_gen = [&](int h) {
        SymPoly img;
        if (h == target) img.emplace(s.unit(), Scalar(1));
        return img;
    };
    return s.apply_derivation(f, w.degree(g), on_gen);
}

FockVector fock_apply(const WeylAlgebra& w, const WeylAlgebra::Element& u, const FockVector& f) {
    FockVector out;
    for (const auto& [m, c] : u) {
        auto seq = w.expand(m);
        FockVector cur = f;
        for (auto it = seq.rbegin(); it != seq.rend() && !cur.empty(); ++it) cur = fock_generator(w, *it, cur);
        for (const auto& [fm, fc] : cur) add_term(out, fm, fc * c);
    }
    return out;
}

FockVector fock_apply_by_normal_order(const WeylAlgebra& w, const WeylAlgebra::Element& u, const FockVector& f) {
    WeylAlgebra::Element fe;
    for (const auto& [m, c] : f) {
        Monomial mm(static_cast<std::size_t>(w.ngens()), 0);
        std::copy(m.begin(), m.end(), mm.begin());
        add_term(fe, mm, c);
    }
    FockVector out;
    for (const auto& [m, c] : w.multiply(u, fe)) {
        bool has_d = false;
        for (int j = w.half(); j < w.ngens() && !has_d; ++j) has_d = m[static_cast<std::size_t>(j)] > 0;
        if (has_d) continue;
        add_term(out, Monomial(m.begin(), m.begin() + w.half()), c);
    }
    return out;
}

DualFockVector dual_fock_generator(const WeylAlgebra& w, int g, const DualFockVector& f) {
    const SymAlgebra& s = w.dual_fock_algebra();
    if (!w.is_x(g)) {
        FockVector gd{{s.generator(g - w.half()), Scalar(1)}};
        return s.multiply(gd, f);
    }
    const int a = w.basis_index(g);
    const Scalar value(-w.space()->parity(a));
    auto on_gen = [&](int h) {
        SymPoly img;
        if (h == g) img.emplace(s.unit(), value);
        return img;
    };
    return s.apply_derivation(f, w.degree(g), on_gen);
}

// ------------------------------------------------------------- dual pair

DualPairGenerators dual_pair_generators(const WeylAlgebra& w) {
    const int n = w.copies();
    const int dim = w.space()->dim();
    DualPairGenerators g;
    g.e_gl_n.assign(static_cast<std::size_t>(n), std::vector<WeylAlgebra::Element>(static_cast<std::size_t>(n)));
    g.e_gl_v.assign(static_cast<std::size_t>(dim), std::vector<WeylAlgebra::Element>(static_cast<std::size_t>(dim)));
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
            for (int a = 0; a < dim; ++a)
                g.e_gl_n[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] =
                    g.e_gl_n[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] +
                    w.multiply(w.gen(w.x_id(a, r)), w.gen(w.d_id(a, s)));
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b)
            for (int r = 0; r < n; ++r)
                g.e_gl_v[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                    g.e_gl_v[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] +
                    w.multiply(w.gen(w.x_id(a, r)), w.gen(w.d_id(b, r)));
    return g;
}

WeylAlgebra::Element gl_to_weyl(const DualPairGenerators& g, const GlElement& x) {
    WeylAlgebra::Element out;
    for (const auto& [k, c] : x.terms())
        out = out + scale(g.e_gl_v[static_cast<std::size_t>(k.first)][static_cast<std::size_t>(k.second)], c);
    return out;
}

DualPairReport check_dual_pair(const WeylAlgebra& w) {
    DualPairReport rep;
    auto g = dual_pair_generators(w);
    const int n = w.copies();
    const int dim = w.space()->dim();
    auto at = [](const auto& m, int i, int j) -> const WeylAlgebra::Element& {
        return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    };
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t)
                for (int u = 0; u < n; ++u) {
                    WeylAlgebra::Element expect;
                    if (s == t) expect = expect + at(g.e_gl_n, r, u);
                    if (r == u) expect = expect - at(g.e_gl_n, t, s);
                    ++rep.gl_n_checked;
                    if (w.bracket(at(g.e_gl_n, r, s), at(g.e_gl_n, t, u)) != expect) ++rep.gl_n_failed;
                }
    const SpacePtr& sp = w.space();
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b)
            for (int c = 0; c < dim; ++c)
                for (int d = 0; d < dim; ++d) {
                    GlElement br = cgl::bracket(GlElement::unit(sp, a, b), GlElement::unit(sp, c, d));
                    ++rep.gl_v_checked;
                    if (w.bracket(at(g.e_gl_v, a, b), at(g.e_gl_v, c, d)) != gl_to_weyl(g, br)) ++rep.gl_v_failed;
                }
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
            for (int a = 0; a < dim; ++a)
                for (int b = 0; b < dim; ++b) {
                    ++rep.commutant_checked;
                    if (!w.bracket(at(g.e_gl_n, r, s), at(g.e_gl_v, a, b)).empty()) ++rep.commutant_failed;
                }
    return rep;
}

WeylRelationReport check_fock_relations(const WeylAlgebra& w, int max_degree) {
    WeylRelationReport rep;
    const SymAlgebra& s = w.fock_algebra();
    const CommutativeFactor& f = w.space()->factor();
    std::vector<Monomial> monos;
    for (int d = 0; d <= max_degree; ++d)
        for (auto& m : s.monomials(d)) monos.push_back(std::move(m));
    const int g = w.ngens();
    for (const auto& m : monos) {
        FockVector v{{m, Scalar(1)}};
        for (int i = 0; i < g; ++i) {
            FockVector iv = fock_generator(w, i, v);
            for (int j = 0; j < g; ++j) {
                // g_i g_j - omega(d_i, d_j) g_j g_i equals a scalar c_ij.
                FockVector lhs = fock_generator(w, i, fock_generator(w, j, v));
                FockVector rhs = fock_generator(w, j, iv);
                Scalar om = f.omega_eval(w.degree(i), w.degree(j));
                for (const auto& [mm, c] : rhs) add_term(lhs, mm, -(c * om));
                Scalar cij;
                if (!w.is_x(i) && w.is_x(j) && i - w.half() == j) cij = Scalar(1);
                if (w.is_x(i) && !w.is_x(j) && j - w.half() == i) cij = -om;
                add_term(lhs, m, -cij);
                ++rep.checked;
                if (!lhs.empty()) ++rep.failed;
            }
        }
    }
    return rep;
}

Level2Report check_level2_invariants(const WeylAlgebra& w) {
    Level2Report rep;
    const int g = w.ngens();
    const int dim = w.space()->dim();
    rep.expected_dim = static_cast<std::size_t>(dim * dim + 1);
    // Normal monomials of total degree <= 2.
    std::vector<Monomial> basis;
    Monomial zero(static_cast<std::size_t>(g), 0);
    basis.push_back(zero);
    for (int i = 0; i < g; ++i) {
        Monomial m = zero;
        m[static_cast<std::size_t>(i)] = 1;
        basis.push_back(m);
    }
    for (int i = 0; i < g; ++i)
        for (int j = i; j < g; ++j) {
            if (i == j && w.is_odd(i)) continue;
            Monomial m = zero;
            ++m[static_cast<std::size_t>(i)];
            ++m[static_cast<std::size_t>(j)];
            basis.push_back(m);
        }
    std::map<Monomial, int> index;
    for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = static_cast<int>(k);
    const int ncols = static_cast<int>(basis.size());
    auto to_row = [&](const WeylAlgebra::Element& u) {
        SparseRow row;
        for (const auto& [m, c] : u) {
            auto it = index.find(m);
            if (it == index.end()) throw Error("filtration degree exceeded in level-2 check");
            row[it->second] = c;
        }
        return row;
    };
    auto gens = dual_pair_generators(w);
    // Row (r, s, target monomial) collects the coefficient of the target in
    // [E^{rs}, b] for every basis monomial b.
    std::map<std::tuple<int, int, int>, SparseRow> rows;
    for (int r = 0; r < w.copies(); ++r)
        for (int s = 0; s < w.copies(); ++s)
            for (int k = 0; k < ncols; ++k) {
                WeylAlgebra::Element b{{basis[static_cast<std::size_t>(k)], Scalar(1)}};
                auto img = w.bracket(gens.e_gl_n[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)], b);
                for (const auto& [col, c] : to_row(img)) rows[{r, s, col}][k] = c;
            }
    EchelonBasis eqs(ncols);
    for (auto& [key, row] : rows) eqs.insert(row);
    auto kernel = eqs.kernel();
    rep.invariant_dim = kernel.size();
    EchelonBasis span(ncols);
    span.insert(to_row(w.one()));
    rep.generators_invariant = true;
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) span.insert(to_row(gens.e_gl_v[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]));
    for (int r = 0; r < w.copies(); ++r)
        for (int s = 0; s < w.copies(); ++s)
            for (int a = 0; a < dim; ++a)
                for (int b = 0; b < dim; ++b)
                    if (!w.bracket(gens.e_gl_n[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)],
                                   gens.e_gl_v[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
                             .empty())
                        rep.generators_invariant = false;
    rep.generators_span = span.rank() == rep.expected_dim;
    for (const auto& k : kernel)
        if (!span.contains(k)) rep.generators_span = false;
    return rep;
}

}  // namespace cgl
