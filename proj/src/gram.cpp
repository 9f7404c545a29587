#include "cgl/gram.hpp"

#include <tuple>

#include "cgl/error.hpp"

namespace cgl {

namespace {

void add_to(KacModule::Element& u, const KacModule::Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = u.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) u.erase(it);
    }
}

int first_generator(const Monomial& m) {
    for (std::size_t g = 0; g < m.size(); ++g)
        if (m[g] > 0) return static_cast<int>(g);
    return -1;
}

Partition block_part(const Weight& l, int begin, int end) {
    std::vector<int> parts;
    for (int a = begin; a < end; ++a) {
        Rational d = l[static_cast<std::size_t>(a)] - l[static_cast<std::size_t>(end - 1)];
        parts.push_back(static_cast<int>(d.get_num().get_si()));
    }
    return Partition(parts);
}

TensorVector block_highest(const SpacePtr& block, const Partition& l, bool odd) {
    if (l.empty()) return TensorVector::basis(block, {});
    return highest_weight_vector(block, odd ? l.transpose() : l);
}

std::vector<Degree> lowering_degrees(const GradedSpace& v) {
    std::vector<Degree> out;
    for (int r = v.m_plus(); r < v.dim(); ++r)
        for (int i = 0; i < v.m_plus(); ++i) out.push_back(v.unit_degree(r, i));
    return out;
}

}  // namespace

KacModule::KacModule(const HighestWeight& hw)
    : space_(hw.space), lambda_(hw.lambda), ys_(hw.space->factor(), lowering_degrees(*hw.space)) {
    const GradedSpace& v = *space_;
    if (!v.factor().has_unit_modulus_property())
        throw UnsupportedError("contravariant forms need a sign-valued commutative factor");
    if (!hw.dominant()) throw DomainError("weight " + lambda_.str() + " is not dominant");
    const int mp = v.m_plus(), mm = v.m_minus();
    if (mp) twist_plus_ = lambda_[static_cast<std::size_t>(mp - 1)];
    if (mm) twist_minus_ = lambda_[static_cast<std::size_t>(v.dim() - 1)];
    for (int r = mp; r < v.dim(); ++r)
        for (int i = 0; i < mp; ++i) {
            unit_index_[{r, i}] = static_cast<int>(units_.size());
            units_.emplace_back(r, i);
        }

    const Partition mu_plus = mp ? block_part(lambda_, 0, mp) : Partition();
    const Partition mu_minus = mm ? block_part(lambda_, mp, v.dim()) : Partition();
    const int power = mu_plus.size() + mu_minus.size();
    long double words = 1;
    for (int k = 0; k < power; ++k) words *= v.dim();
    if (words > 1e6) throw ResourceError("Levi realisation needs more than 10^6 words");
    const TensorVector hp = block_highest(v.block(1), mu_plus, false);
    const TensorVector hm = block_highest(v.block(-1), mu_minus, true);
    TensorVector top(space_, power);
    for (const auto& [w1, c1] : hp.terms())
        for (const auto& [w2, c2] : hm.terms()) {
            Word w = w1;
            for (int x : w2) w.push_back(x + mp);
            top.add(w, c1 * c2);
        }
    std::vector<std::pair<int, int>> lower;
    for (int a = 0; a < v.dim(); ++a)
        for (int b = 0; b < a; ++b)
            if (v.is_even(a) == v.is_even(b)) lower.emplace_back(a, b);
    levi_ = lowering_closure(top, lower);
    Scalar norm;
    for (const auto& [w, c] : top.terms()) norm += c * c;
    top_norm_inv_ = norm.inverse();
}

KacModule::Element KacModule::left_multiply(int g, const Element& u) const {
    Element out;
    const Monomial y = ys_.generator(g);
    for (const auto& [k, c] : u) {
        auto p = ys_.mono_mul(y, k.first);
        if (!p) continue;
        add_to(out, {p->second, k.second}, c.times_monomial(p->first.sign, static_cast<int>(p->first.qexp)));
    }
    return out;
}

KacModule::Element KacModule::act(int c, int d, const Key& k) const {
    auto key = std::make_tuple(c, d, k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const GradedSpace& v = *space_;
    Element out;
    const int g1 = first_generator(k.first);
    if (g1 < 0) {
        const bool ce = v.is_even(c), de = v.is_even(d);
        if (ce && !de) {
            // n1^+ kills L0.
        } else if (!ce && de) {
            add_to(out, {ys_.generator(unit_index_.at({c, d})), k.second}, Scalar(1));
        } else {
            TensorVector t = gl_act_tensor(GlElement::unit(space_, c, d), TensorVector::basis(space_, k.second));
            for (const auto& [w, x] : t.terms()) add_to(out, {k.first, w}, x);
            if (c == d) add_to(out, k, Scalar(ce ? twist_plus_ : twist_minus_));
        }
    } else {
        Monomial rest = k.first;
        --rest[static_cast<std::size_t>(g1)];
        const Key rk{rest, k.second};
        const auto [r, i] = units_[static_cast<std::size_t>(g1)];
        GlElement br = bracket(GlElement::unit(space_, c, d), GlElement::unit(space_, r, i));
        for (const auto& [ab, x] : br.terms())
            for (const auto& [kk, y] : act(ab.first, ab.second, rk)) add_to(out, kk, x * y);
        const OmegaValue om = omega_units(v, c, d, r, i);
        for (const auto& [kk, y] : left_multiply(g1, act(c, d, rk)))
            add_to(out, kk, y.times_monomial(om.sign, static_cast<int>(om.qexp)));
    }
    memo_.emplace(key, out);
    return out;
}

KacModule::Element KacModule::act(const GlElement& x, const Element& u) const {
    Element out;
    for (const auto& [cd, a] : x.terms())
        for (const auto& [k, b] : u)
            for (const auto& [kk, y] : act(cd.first, cd.second, k)) add_to(out, kk, a * b * y);
    return out;
}

KacModule::Element KacModule::embed(const Monomial& s, const TensorVector& v) const {
    Element out;
    for (const auto& [w, c] : v.terms()) add_to(out, {s, w}, c);
    return out;
}

Scalar KacModule::form(const Key& k, const Element& u) const {
    const int g1 = first_generator(k.first);
    if (g1 < 0) {
        auto it = u.find(k);
        return it == u.end() ? Scalar(0) : it->second * top_norm_inv_;
    }
    Monomial rest = k.first;
    --rest[static_cast<std::size_t>(g1)];
    const auto [r, i] = units_[static_cast<std::size_t>(g1)];
    Element moved;
    for (const auto& [kk, c] : u)
        for (const auto& [k2, y] : act(i, r, kk)) add_to(moved, k2, c * y);
    return form(Key{rest, k.second}, moved);
}

Scalar KacModule::form(const Element& u, const Element& w) const {
    Scalar s;
    for (const auto& [k, c] : u) s += c * form(k, w);
    return s;
}

Weight KacModule::weight_of(const Monomial& s, const Word& w) const {
    const GradedSpace& v = *space_;
    Weight out = word_weight(v, w);
    for (int a = 0; a < v.dim(); ++a) out[static_cast<std::size_t>(a)] += v.is_even(a) ? twist_plus_ : twist_minus_;
    for (std::size_t g = 0; g < s.size(); ++g)
        if (s[g]) {
            const auto [r, i] = units_[g];
            out += Rational(s[g]) * (epsilon(v, r) - epsilon(v, i));
        }
    return out;
}

std::string to_string(GramVerdict v) {
    switch (v) {
        case GramVerdict::positive_definite: return "positive_definite";
        case GramVerdict::singular: return "singular";
        case GramVerdict::indefinite: return "indefinite";
    }
    return "?";
}

GramReport gram_report(const HighestWeight& hw, int depth) {
    const GradedSpace& v = *hw.space;
    GramReport rep;
    rep.lambda = hw.lambda;
    rep.max_depth = v.m_plus() * v.m_minus();
    if (depth < 0 || depth > rep.max_depth)
        throw DomainError("depth must lie in [0, " + std::to_string(rep.max_depth) + "]");
    rep.depth = depth;
    KacModule k(hw);
    bool negative = false;
    for (int level = 0; level <= depth; ++level) {
        std::map<Weight, std::vector<KacModule::Element>> spaces;
        std::size_t count = 0;
        for (const auto& s : k.lowering().monomials(level))
            for (const auto& b : k.levi_basis()) {
                spaces[k.weight_of(s, b.terms().begin()->first)].push_back(k.embed(s, b));
                ++count;
            }
        rep.level_dims.push_back(count);
        for (auto& [wt, elems] : spaces) {
            GramBlock blk;
            blk.level = level;
            blk.weight = wt;
            blk.matrix.assign(elems.size(), std::vector<Rational>(elems.size()));
            for (std::size_t p = 0; p < elems.size(); ++p)
                for (std::size_t q = 0; q < elems.size(); ++q) {
                    Scalar x = k.form(elems[p], elems[q]);
                    if (!x.is_rational()) throw Error("contravariant form took a non-rational value " + x.str());
                    blk.matrix[p][q] = x.to_rational();
                }
            blk.inertia = inertia(blk.matrix);
            negative = negative || blk.inertia.negative > 0;
            rep.radical_dim += static_cast<std::size_t>(blk.inertia.zero);
            rep.blocks.push_back(std::move(blk));
        }
    }
    rep.verdict = negative ? GramVerdict::indefinite
                           : (rep.radical_dim ? GramVerdict::singular : GramVerdict::positive_definite);
    return rep;
}

}  // namespace cgl
