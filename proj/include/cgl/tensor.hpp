#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cgl/gl_algebra.hpp"
#include "cgl/partitions.hpp"

namespace cgl {

using Word = std::vector<int>;  // flat basis indices, one per tensor slot

class TensorVector {
public:
    TensorVector(SpacePtr space, int power);
    static TensorVector basis(SpacePtr space, Word w, const Scalar& c = Scalar(1));

    const SpacePtr& space() const { return space_; }
    int power() const { return r_; }
    const std::map<Word, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const Word& w) const;

    void add(const Word& w, const Scalar& c);
    TensorVector& operator+=(const TensorVector& o);
    TensorVector& operator-=(const TensorVector& o);
    TensorVector& operator*=(const Scalar& s);
    friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
    friend TensorVector operator-(TensorVector a, const TensorVector& b) { return a -= b; }
    friend TensorVector operator*(const Scalar& s, TensorVector a) { return a *= s; }
    friend bool operator==(const TensorVector& a, const TensorVector& b) { return a.terms_ == b.terms_; }

    // The h-weight if every word carries the same one.
    std::optional<Weight> weight() const;
    std::string str() const;

private:
    SpacePtr space_;
    int r_;
    std::map<Word, Scalar> terms_;
};

Weight word_weight(const GradedSpace& v, const Word& w);
Degree word_degree(const GradedSpace& v, const Word& w);

// p[j] is the slot that slot j is sent to (0-based).
using Permutation = std::vector<int>;

Permutation identity_permutation(int r);
Permutation compose(const Permutation& p, const Permutation& q);  // p after q
int permutation_sign(const Permutation& p);
std::vector<Permutation> all_permutations(int r);

// Formal linear combination of permutations of r slots.
struct SymGroupElement {
    int r = 0;
    std::map<Permutation, Scalar> terms;

    explicit SymGroupElement(int r_ = 0) : r(r_) {}
    void add(const Permutation& p, const Scalar& c);
    friend SymGroupElement operator*(const SymGroupElement& a, const SymGroupElement& b);
};

// nu_r(sigma_i) for the adjacent transposition of slots i, i+1 (1-based i).
TensorVector braiding_apply(int i, const TensorVector& v);
// nu_r(p) by the closed inversion formula.
TensorVector permutation_apply(const Permutation& p, const TensorVector& v);
// nu_r(p) as a product of adjacent transpositions.
TensorVector permutation_apply_by_transpositions(const Permutation& p, const TensorVector& v);
TensorVector sym_apply(const SymGroupElement& x, const TensorVector& v);

// (Sigma^+(r), Sigma^-(r)): the signed and the plain sums over Sym_r.
std::pair<SymGroupElement, SymGroupElement> total_symmetrizers(int r);

struct YoungParts {
    std::vector<std::vector<int>> rows;     // slots of the canonical tableau
    std::vector<std::vector<int>> columns;
    SymGroupElement row_sum;                // A_lambda
    SymGroupElement column_sum;             // B_lambda, signed
};
YoungParts young_parts(const Partition& l);
SymGroupElement young_symmetrizer(const Partition& l);  // B_lambda A_lambda
// C_lambda v applied factor by factor without expanding the product.
TensorVector apply_young(const YoungParts& y, const TensorVector& v);

// Coproduct action of X on V^{(x) r}.
TensorVector gl_act_tensor(const GlElement& x, const TensorVector& v);

// The seed word of rows b_i (i <= M+) and skew rows b_1', b_2', ...
Word seed_word(const GradedSpace& v, const Partition& l);
// C_lambda applied to the seed word; DomainError outside P_{M+|M-}.
TensorVector highest_weight_vector(SpacePtr space, const Partition& l);

// True if every E_ab with a < b kills v.
bool is_highest_weight(const TensorVector& v);

// dim span { nu_r(p) v : p in Sym_r }.
std::size_t sym_orbit_rank(const TensorVector& v);

struct SchurWeylRow {
    Partition lambda;
    Weight sharp;
    std::uint64_t k = 0;  // multiplicity space dimension for gl(V)
    std::uint64_t f = 0;  // dim of the Specht module
    bool hwv_nonzero = false;
    bool hwv_weight_ok = false;
    bool hwv_annihilated = false;
};

struct SchurWeylTable {
    int power = 0;
    std::vector<SchurWeylRow> rows;
    std::uint64_t total = 0;     // sum k f
    std::uint64_t expected = 0;  // (dim V)^r
    bool ok() const;
};

// Refuses (dim V)^r above max_words.
SchurWeylTable schur_weyl_table(SpacePtr space, int r, std::uint64_t max_words = 1000000, bool parallel = true);

// Dual module V*: vectors are maps a -> coefficient of the dual basis e^a.
using DualVector = std::map<int, Scalar>;
DualVector dual_act(const GlElement& x, const DualVector& w);
// <w, v> with <e^a, e_b> = delta_ab.
Scalar dual_pair(const DualVector& w, const std::map<int, Scalar>& v);
std::map<int, Scalar> natural_act(const GlElement& x, const std::map<int, Scalar>& v);

// Elements of V (x) V* as maps (a, b) -> coefficient of e_a (x) e^b.
using MixedTensor = std::map<std::pair<int, int>, Scalar>;
MixedTensor mixed_act(const GlElement& x, const MixedTensor& t);
MixedTensor canonical_invariant(const GradedSpace& v);

// Repeatedly applies simple lowering operators E_{a+1,a} until every one
// of them kills the vector; the result spans the lowest weight space of the
// simple module generated by a highest weight vector.
TensorVector lowest_weight_vector(const TensorVector& hwv);

// Basis of U(n^-) v inside the tensor power, built by lowering closure with
// the operators E_ab (a > b) in `lowering`.
std::vector<TensorVector> lowering_closure(const TensorVector& v, const std::vector<std::pair<int, int>>& lowering);

}  // namespace cgl
