#include "cgl/tensor.hpp"

#include <algorithm>
#include <deque>
#include <exception>
#include <functional>
#include <numeric>
#include <sstream>

#include "cgl/error.hpp"
#include "cgl/linalg.hpp"
#include "cgl/parallel.hpp"

namespace cgl {

TensorVector::TensorVector(SpacePtr space, int power) : space_(std::move(space)), r_(power) {
    if (!space_) throw PreconditionError("TensorVector needs a space");
    if (r_ < 0) throw DomainError("tensor power must be non-negative");
}

TensorVector TensorVector::basis(SpacePtr space, Word w, const Scalar& c) {
    TensorVector v(std::move(space), static_cast<int>(w.size()));
    v.add(w, c);
    return v;
}

Scalar TensorVector::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar() : it->second;
}

void TensorVector::add(const Word& w, const Scalar& c) {
    if (static_cast<int>(w.size()) != r_) throw ShapeError("word length does not match tensor power");
    if (c.is_zero()) return;
    for (int a : w)
        if (a < 0 || a >= space_->dim()) throw ShapeError("word letter outside the basis");
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorVector& TensorVector::operator+=(const TensorVector& o) {
    if (o.r_ != r_) throw ShapeError("tensor powers differ");
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& o) {
    if (o.r_ != r_) throw ShapeError("tensor powers differ");
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

TensorVector& TensorVector::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
}

std::optional<Weight> TensorVector::weight() const {
    std::optional<Weight> wt;
    for (const auto& [w, c] : terms_) {
        Weight x = word_weight(*space_, w);
        if (!wt) wt = x;
        else if (!(*wt == x)) return std::nullopt;
    }
    if (!wt) return std::nullopt;
    return wt;
}

std::string TensorVector::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << '(' << c.str() << ")b[";
        for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << space_->label(w[i]);
        os << ']';
    }
    return os.str();
}

Weight word_weight(const GradedSpace& v, const Word& w) {
    Weight x(static_cast<std::size_t>(v.dim()));
    for (int a : w) x[static_cast<std::size_t>(a)] += 1;
    return x;
}

Degree word_degree(const GradedSpace& v, const Word& w) {
    Degree d = Degree::zero(v.group());
    for (int a : w) d += v.degree(a);
    return d;
}

// ---------------------------------------------------------- permutations

Permutation identity_permutation(int r) {
    Permutation p(static_cast<std::size_t>(r));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw ShapeError("permutation sizes differ");
    Permutation out(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) out[j] = p[static_cast<std::size_t>(q[j])];
    return out;
}

int permutation_sign(const Permutation& p) {
    int s = 1;
    for (std::size_t j = 0; j < p.size(); ++j)
        for (std::size_t k = j + 1; k < p.size(); ++k)
            if (p[j] > p[k]) s = -s;
    return s;
}

std::vector<Permutation> all_permutations(int r) {
    std::vector<Permutation> out;
    Permutation p = identity_permutation(r);
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

void SymGroupElement::add(const Permutation& p, const Scalar& c) {
    if (static_cast<int>(p.size()) != r) throw ShapeError("permutation size does not match");
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

SymGroupElement operator*(const SymGroupElement& a, const SymGroupElement& b) {
    if (a.r != b.r) throw ShapeError("group algebra elements of different Sym_r");
    SymGroupElement out(a.r);
    for (const auto& [p, cp] : a.terms)
        for (const auto& [q, cq] : b.terms) out.add(compose(p, q), cp * cq);
    return out;
}

TensorVector braiding_apply(int i, const TensorVector& v) {
    if (i < 1 || i >= v.power()) throw ShapeError("braiding index out of range");
    const GradedSpace& sp = *v.space();
    TensorVector out(v.space(), v.power());
    for (const auto& [w, c] : v.terms()) {
        Word u = w;
        const auto k = static_cast<std::size_t>(i - 1);
        std::swap(u[k], u[k + 1]);
        OmegaValue f = sp.omega_idx(w[k], w[k + 1]);
        out.add(u, c.times_monomial(f.sign, static_cast<int>(f.qexp)));
    }
    return out;
}

TensorVector permutation_apply(const Permutation& p, const TensorVector& v) {
    if (static_cast<int>(p.size()) != v.power()) throw ShapeError("permutation size does not match tensor power");
    const GradedSpace& sp = *v.space();
    TensorVector out(v.space(), v.power());
    const std::size_t r = p.size();
    for (const auto& [w, c] : v.terms()) {
        Word u(r);
        OmegaValue f;
        for (std::size_t j = 0; j < r; ++j) {
            u[static_cast<std::size_t>(p[j])] = w[j];
            for (std::size_t k = j + 1; k < r; ++k)
                if (p[j] > p[k]) f = f * sp.omega_idx(w[j], w[k]);
        }
        out.add(u, c.times_monomial(f.sign, static_cast<int>(f.qexp)));
    }
    return out;
}

TensorVector permutation_apply_by_transpositions(const Permutation& p, const TensorVector& v) {
    if (static_cast<int>(p.size()) != v.power()) throw ShapeError("permutation size does not match tensor power");
    std::vector<int> occ = identity_permutation(v.power());
    TensorVector cur = v;
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t t = 0; t + 1 < occ.size(); ++t) {
            if (p[static_cast<std::size_t>(occ[t])] > p[static_cast<std::size_t>(occ[t + 1])]) {
                cur = braiding_apply(static_cast<int>(t + 1), cur);
                std::swap(occ[t], occ[t + 1]);
                moved = true;
            }
        }
    }
    return cur;
}

TensorVector sym_apply(const SymGroupElement& x, const TensorVector& v) {
    TensorVector out(v.space(), v.power());
    for (const auto& [p, c] : x.terms) out += c * permutation_apply(p, v);
    return out;
}

std::pair<SymGroupElement, SymGroupElement> total_symmetrizers(int r) {
    SymGroupElement plus(r), minus(r);
    for (const auto& p : all_permutations(r)) {
        plus.add(p, Scalar(permutation_sign(p)));
        minus.add(p, Scalar(1));
    }
    return {plus, minus};
}

namespace {

// Sum over permutations preserving each block, with sign if requested.
SymGroupElement block_sum(int r, const std::vector<std::vector<int>>& blocks, bool signed_sum) {
    SymGroupElement out(r);
    Permutation p = identity_permutation(r);
    std::function<void(std::size_t, int)> rec = [&](std::size_t b, int sign) {
        if (b == blocks.size()) {
            out.add(p, Scalar(signed_sum ? sign : 1));
            return;
        }
        const auto& blk = blocks[b];
        std::vector<int> img = blk;
        do {
            int s = 1;
            for (std::size_t i = 0; i < img.size(); ++i) {
                p[static_cast<std::size_t>(blk[i])] = img[i];
                for (std::size_t j = i + 1; j < img.size(); ++j)
                    if (img[i] > img[j]) s = -s;
            }
            rec(b + 1, sign * s);
        } while (std::next_permutation(img.begin(), img.end()));
        for (int x : blk) p[static_cast<std::size_t>(x)] = x;
    };
    rec(0, 1);
    return out;
}

}  // namespace

YoungParts young_parts(const Partition& l) {
    YoungParts y;
    const int r = l.size();
    int slot = 0;
    for (int i = 1; i <= l.length(); ++i) {
        std::vector<int> row;
        for (int j = 0; j < l.part(i); ++j) row.push_back(slot++);
        y.rows.push_back(std::move(row));
    }
    for (int j = 0; j < l.part(1); ++j) {
        std::vector<int> col;
        for (const auto& row : y.rows)
            if (static_cast<int>(row.size()) > j) col.push_back(row[static_cast<std::size_t>(j)]);
        y.columns.push_back(std::move(col));
    }
    y.row_sum = block_sum(r, y.rows, false);
    y.column_sum = block_sum(r, y.columns, true);
    return y;
}

SymGroupElement young_symmetrizer(const Partition& l) {
    YoungParts y = young_parts(l);
    return y.column_sum * y.row_sum;
}

TensorVector apply_young(const YoungParts& y, const TensorVector& v) {
    return sym_apply(y.column_sum, sym_apply(y.row_sum, v));
}

// ---------------------------------------------------------------- action

TensorVector gl_act_tensor(const GlElement& x, const TensorVector& v) {
    require_same_space(x, GlElement(v.space()));
    const GradedSpace& sp = *v.space();
    TensorVector out(v.space(), v.power());
    for (const auto& [w, c] : v.terms()) {
        for (const auto& [k, cx] : x.terms()) {
            const auto [a, b] = k;
            OmegaValue f;  // omega(gamma_a - gamma_b, degrees of the prefix)
            for (std::size_t j = 0; j < w.size(); ++j) {
                if (w[j] == b) {
                    Word u = w;
                    u[j] = a;
                    out.add(u, (c * cx).times_monomial(f.sign, static_cast<int>(f.qexp)));
                }
                f = f * sp.omega_idx(a, w[j]) * sp.omega_idx(b, w[j]).inverse();
            }
        }
    }
    return out;
}

Word seed_word(const GradedSpace& v, const Partition& l) {
    Word w;
    const int mp = v.m_plus();
    for (int i = 1; i <= l.length(); ++i)
        for (int j = 0; j < l.part(i); ++j) w.push_back(i <= mp ? i - 1 : mp + j);
    return w;
}

TensorVector highest_weight_vector(SpacePtr space, const Partition& l) {
    if (!in_hook(l, space->m_plus(), space->m_minus()))
        throw DomainError("partition " + l.str() + " is outside the hook of this space");
    Word w = seed_word(*space, l);
    return apply_young(young_parts(l), TensorVector::basis(space, w));
}

bool is_highest_weight(const TensorVector& v) {
    const int n = v.space()->dim();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (!gl_act_tensor(GlElement::unit(v.space(), a, b), v).is_zero()) return false;
    return true;
}

namespace {

std::uint64_t word_count(int dim, int r, std::uint64_t cap) {
    std::uint64_t n = 1;
    for (int i = 0; i < r; ++i) {
        if (dim != 0 && n > cap / static_cast<std::uint64_t>(dim) + 1) return cap + 1;
        n *= static_cast<std::uint64_t>(dim);
    }
    return n;
}

int word_index(const Word& w, int dim) {
    long long idx = 0;
    for (int a : w) idx = idx * dim + a;
    return static_cast<int>(idx);
}

SparseRow as_row(const TensorVector& v) {
    SparseRow row;
    for (const auto& [w, c] : v.terms()) row[word_index(w, v.space()->dim())] = c;
    return row;
}

int row_width(const TensorVector& v) {
    std::uint64_t n = word_count(v.space()->dim(), v.power(), 1u << 30);
    if (n > (1u << 30)) throw ResourceError("tensor power too large for a dense word index");
    return static_cast<int>(n);
}

}  // namespace

std::size_t sym_orbit_rank(const TensorVector& v) {
    EchelonBasis b(row_width(v));
    for (const auto& p : all_permutations(v.power())) b.insert(as_row(permutation_apply(p, v)));
    return b.rank();
}

bool SchurWeylTable::ok() const {
    if (total != expected) return false;
    for (const auto& r : rows)
        if (!r.hwv_nonzero || !r.hwv_weight_ok || !r.hwv_annihilated) return false;
    return true;
}

SchurWeylTable schur_weyl_table(SpacePtr space, int r, std::uint64_t max_words, bool parallel) {
    if (r < 0) throw DomainError("tensor power must be non-negative");
    const std::uint64_t words = word_count(space->dim(), r, max_words);
    if (words > max_words)
        throw ResourceError("(dim V)^r = " + std::to_string(space->dim()) + "^" + std::to_string(r) +
                            " exceeds the word cap " + std::to_string(max_words));
    const int mp = space->m_plus();
    const int mm = space->m_minus();
    SchurWeylTable t;
    t.power = r;
    t.expected = words;
    auto parts = hook_partitions(mp, mm, std::max(r, 1), r);
    t.rows.resize(parts.size());
    auto fill = [&](std::size_t i) {
        SchurWeylRow& row = t.rows[i];
        row.lambda = parts[i];
        row.sharp = lambda_sharp(parts[i], mp, mm);
        row.k = count_hook_tableaux(parts[i], mp, mm);
        row.f = count_standard_tableaux(parts[i]);
        TensorVector v = highest_weight_vector(space, parts[i]);
        row.hwv_nonzero = !v.is_zero();
        auto wt = v.weight();
        row.hwv_weight_ok = wt && *wt == row.sharp;
        row.hwv_annihilated = is_highest_weight(v);
    };
    const auto n = static_cast<std::ptrdiff_t>(parts.size());
    if (parallel) {
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            try {
                fill(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical(cgl_sw_failure)
                failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
    } else {
        for (std::ptrdiff_t i = 0; i < n; ++i) fill(static_cast<std::size_t>(i));
    }
    for (const auto& row : t.rows) t.total += row.k * row.f;
    return t;
}

// ------------------------------------------------------------- dual module

DualVector dual_act(const GlElement& x, const DualVector& w) {
    const GradedSpace& sp = *x.space();
    DualVector out;
    for (const auto& [k, cx] : x.terms()) {
        const auto [c, d] = k;
        auto it = w.find(c);
        if (it == w.end()) continue;
        OmegaValue f = sp.omega_idx(c, c) * sp.omega_idx(d, c);
        Scalar v = (cx * it->second).times_monomial(-f.sign, static_cast<int>(f.qexp));
        auto [jt, inserted] = out.try_emplace(d, v);
        if (!inserted) {
            jt->second += v;
            if (jt->second.is_zero()) out.erase(jt);
        }
    }
    return out;
}

Scalar dual_pair(const DualVector& w, const std::map<int, Scalar>& v) {
    Scalar s;
    for (const auto& [a, c] : w) {
        auto it = v.find(a);
        if (it != v.end()) s += c * it->second;
    }
    return s;
}

std::map<int, Scalar> natural_act(const GlElement& x, const std::map<int, Scalar>& v) {
    std::map<int, Scalar> out;
    for (const auto& [k, cx] : x.terms()) {
        auto it = v.find(k.second);
        if (it == v.end()) continue;
        Scalar& slot = out[k.first];
        slot += cx * it->second;
        if (slot.is_zero()) out.erase(k.first);
    }
    return out;
}

MixedTensor mixed_act(const GlElement& x, const MixedTensor& t) {
    const GradedSpace& sp = *x.space();
    MixedTensor out;
    auto put = [&](int a, int b, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = out.try_emplace({a, b}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    for (const auto& [ab, c] : t) {
        const auto [a, b] = ab;
        for (const auto& [k, cx] : x.terms()) {
            const auto [p, q] = k;
            if (q == a) put(p, b, cx * c);
            if (p == b) {
                OmegaValue f = sp.omega_idx(p, a) * sp.omega_idx(q, a).inverse() * sp.omega_idx(p, p) * sp.omega_idx(q, p);
                put(a, q, (cx * c).times_monomial(-f.sign, static_cast<int>(f.qexp)));
            }
        }
    }
    return out;
}

MixedTensor canonical_invariant(const GradedSpace& v) {
    MixedTensor c;
    for (int a = 0; a < v.dim(); ++a) c[{a, a}] = Scalar(1);
    return c;
}

TensorVector lowest_weight_vector(const TensorVector& hwv) {
    if (hwv.is_zero()) throw PreconditionError("lowest_weight_vector of the zero vector");
    const int n = hwv.space()->dim();
    TensorVector v = hwv;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int a = 0; a + 1 < n; ++a) {
            TensorVector u = gl_act_tensor(GlElement::unit(v.space(), a + 1, a), v);
            if (!u.is_zero()) {
                v = std::move(u);
                moved = true;
                break;
            }
        }
    }
    return v;
}

std::vector<TensorVector> lowering_closure(const TensorVector& v, const std::vector<std::pair<int, int>>& lowering) {
    std::vector<TensorVector> basis;
    if (v.is_zero()) return basis;
    EchelonBasis ech(row_width(v));
    std::deque<TensorVector> queue{v};
    while (!queue.empty()) {
        TensorVector u = std::move(queue.front());
        queue.pop_front();
        if (!ech.insert(as_row(u))) continue;
        basis.push_back(u);
        for (const auto& [a, b] : lowering) {
            TensorVector w = gl_act_tensor(GlElement::unit(u.space(), a, b), u);
            if (!w.is_zero()) queue.push_back(std::move(w));
        }
    }
    return basis;
}

}  // namespace cgl
