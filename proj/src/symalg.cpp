#include "cgl/symalg.hpp"

#include <algorithm>

#include "cgl/error.hpp"

namespace cgl {

void add_term(SymPoly& p, const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = p.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

SymAlgebra::SymAlgebra(CommutativeFactor factor, std::vector<Degree> generators)
    : factor_(std::move(factor)), deg_(std::move(generators)) {
    const std::size_t n = deg_.size();
    for (const auto& d : deg_) odd_.push_back(factor_.omega_parity(d) < 0);
    tab_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) tab_[i * n + j] = factor_.value(deg_[i], deg_[j]);
}

Monomial SymAlgebra::generator(int g) const {
    if (g < 0 || g >= ngens()) throw ShapeError("generator index out of range");
    Monomial m = unit();
    m[static_cast<std::size_t>(g)] = 1;
    return m;
}

int SymAlgebra::total_degree(const Monomial& m) const {
    int s = 0;
    for (int e : m) s += e;
    return s;
}

Degree SymAlgebra::degree_of(const Monomial& m) const {
    Degree d = Degree::zero(factor_.group());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (int k = 0; k < m[i]; ++k) d += deg_[i];
    return d;
}

std::optional<std::pair<OmegaValue, Monomial>> SymAlgebra::mono_mul(const Monomial& a, const Monomial& b) const {
    const std::size_t n = deg_.size();
    if (a.size() != n || b.size() != n) throw ShapeError("monomial length mismatch");
    Monomial out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = a[i] + b[i];
        if (odd_[i] && out[i] > 1) return std::nullopt;
    }
    // Each generator u of b passes every generator v > u of a.
    OmegaValue w;
    for (std::size_t u = 0; u < n; ++u) {
        if (!b[u]) continue;
        for (std::size_t v = u + 1; v < n; ++v) {
            if (!a[v]) continue;
            const OmegaValue& t = tab_[v * n + u];
            const std::int64_t e = static_cast<std::int64_t>(a[v]) * b[u];
            if ((e & 1) && t.sign < 0) w.sign = -w.sign;
            w.qexp += t.qexp * e;
        }
    }
    return std::make_pair(w, std::move(out));
}

SymPoly SymAlgebra::multiply(const SymPoly& a, const SymPoly& b) const {
    SymPoly r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b)
            if (auto p = mono_mul(ma, mb))
                add_term(r, p->second, (ca * cb).times_monomial(p->first.sign, static_cast<int>(p->first.qexp)));
    return r;
}

SymPoly SymAlgebra::apply_derivation(const SymPoly& f, const Degree& delta, const GeneratorMap& on_gen) const {
    SymPoly r;
    const std::size_t n = deg_.size();
    for (const auto& [m, c] : f) {
        Monomial prefix = unit();
        Monomial suffix = m;
        Degree prefix_deg = Degree::zero(factor_.group());
        for (std::size_t g = 0; g < n; ++g) {
            for (int k = 0; k < m[g]; ++k) {
                --suffix[g];
                OmegaValue tw = factor_.value(delta, prefix_deg);
                for (const auto& [hm, ch] : on_gen(static_cast<int>(g))) {
                    auto p1 = mono_mul(prefix, hm);
                    if (!p1) continue;
                    auto p2 = mono_mul(p1->second, suffix);
                    if (!p2) continue;
                    OmegaValue w = tw * p1->first * p2->first;
                    add_term(r, p2->second, (c * ch).times_monomial(w.sign, static_cast<int>(w.qexp)));
                }
                ++prefix[g];
                prefix_deg += deg_[g];
            }
        }
    }
    return r;
}

std::vector<Monomial> SymAlgebra::monomials(int d, int begin, int end) const {
    std::vector<Monomial> out;
    if (d < 0 || begin < 0 || end > ngens() || begin > end) return out;
    Monomial cur = unit();
    std::function<void(int, int)> rec = [&](int g, int left) {
        if (g == end) {
            if (left == 0) out.push_back(cur);
            return;
        }
        const int cap = odd_[static_cast<std::size_t>(g)] ? std::min(left, 1) : left;
        for (int e = cap; e >= 0; --e) {
            cur[static_cast<std::size_t>(g)] = e;
            rec(g + 1, left - e);
        }
        cur[static_cast<std::size_t>(g)] = 0;
    };
    rec(begin, d);
    return out;
}

}  // namespace cgl
