#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cgl/linalg.hpp"
#include "cgl/reps.hpp"
#include "cgl/symalg.hpp"
#include "cgl/tensor.hpp"

namespace cgl {

// The Kac module K(lambda) = Lambda(n1^-) (x) L0 with L0 realised inside a
// tensor power of V: the first slots carry the gl(V+) part, the remaining
// slots the gl(V-) part, and the constant parts of lambda act as a
// character on the diagonal. Elements are combinations of pairs
// (odd lowering monomial, word).
class KacModule {
public:
    using Key = std::pair<Monomial, Word>;
    using Element = std::map<Key, Scalar>;

    explicit KacModule(const HighestWeight& hw);

    const SpacePtr& space() const { return space_; }
    const SymAlgebra& lowering() const { return ys_; }
    // Generator g of the lowering algebra is E_{odd(g), even(g)}.
    std::pair<int, int> lowering_unit(int g) const { return units_[static_cast<std::size_t>(g)]; }
    int levels() const { return ys_.ngens(); }
    const std::vector<TensorVector>& levi_basis() const { return levi_; }
    const TensorVector& top() const { return levi_.front(); }

    // E_cd acting on a basis pair or an element.
    Element act(int c, int d, const Key& k) const;
    Element act(const GlElement& x, const Element& u) const;
    // y_S (x) v for a lowering monomial S and an L0 vector v.
    Element embed(const Monomial& s, const TensorVector& v) const;
    // Contravariant form with <v+, v+> = 1: E_ab moves across as E_ba.
    Scalar form(const Key& k, const Element& u) const;
    Scalar form(const Element& u, const Element& w) const;
    Weight weight_of(const Monomial& s, const Word& w) const;

private:
    Element left_multiply(int g, const Element& u) const;

    SpacePtr space_;
    Weight lambda_;
    Rational twist_plus_, twist_minus_;
    SymAlgebra ys_;
    std::vector<std::pair<int, int>> units_;
    std::map<std::pair<int, int>, int> unit_index_;
    std::vector<TensorVector> levi_;
    Scalar top_norm_inv_;  // L0 carries the word pairing divided by its value on the top vector
    mutable std::map<std::tuple<int, int, Key>, Element> memo_;
};

enum class GramVerdict { positive_definite, singular, indefinite };
std::string to_string(GramVerdict v);

struct GramBlock {
    int level = 0;
    Weight weight;
    std::vector<std::vector<Rational>> matrix;
    Inertia inertia;
};

struct GramReport {
    Weight lambda;
    int depth = 0;
    int max_depth = 0;  // M+ M-
    std::vector<GramBlock> blocks;
    std::vector<std::size_t> level_dims;
    std::size_t radical_dim = 0;
    GramVerdict verdict = GramVerdict::positive_definite;
    // Positive semidefinite at full depth, i.e. the simple quotient carries a
    // positive definite form.
    bool unitarisable() const { return verdict != GramVerdict::indefinite; }
};

// Gram matrices of levels 0..depth, one block per weight space. Requires a
// sign-valued factor and a dominant weight; depth in [0, M+ M-].
GramReport gram_report(const HighestWeight& hw, int depth);

}  // namespace cgl
