#include <doctest.h>

#include <random>

#include "cgl/error.hpp"
#include "cgl/presets.hpp"
#include "cgl/tensor.hpp"

using namespace cgl;

namespace {

TensorVector random_vector(const SpacePtr& v, int r, std::mt19937_64& rng, int terms = 4) {
    std::uniform_int_distribution<int> idx(0, v->dim() - 1), c(-3, 3);
    TensorVector t(v, r);
    for (int k = 0; k < terms; ++k) {
        Word w;
        for (int i = 0; i < r; ++i) w.push_back(idx(rng));
        t.add(w, Scalar(c(rng)));
    }
    return t;
}

Permutation random_permutation(int r, std::mt19937_64& rng) {
    Permutation p = identity_permutation(r);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

GlElement unit(const SpacePtr& v, int a, int b) { return GlElement::unit(v, a, b); }

std::vector<SpacePtr> spaces() {
    return {make_super(1, 1), make_super(2, 1), make_z2z2({1, 1, 1, 0}), make_glq(1, 1), make_green(2)};
}

}  // namespace

TEST_CASE("braiding of two odd vectors") {
    const auto v = make_super(0, 1);
    const auto t = TensorVector::basis(v, {0, 0});
    CHECK(braiding_apply(1, t) == Scalar(-1) * t);
}

TEST_CASE("braiding is omega-twisted swap") {
    for (const auto& v : spaces())
        for (int a = 0; a < v->dim(); ++a)
            for (int b = 0; b < v->dim(); ++b) {
                const auto t = braiding_apply(1, TensorVector::basis(v, {a, b}));
                CHECK(t == TensorVector::basis(v, {b, a}, v->omega_idx(a, b).scalar()));
            }
}

TEST_CASE("braid and Coxeter relations on random vectors") {
    std::mt19937_64 rng(29);
    for (const auto& v : spaces()) {
        for (int t = 0; t < 20; ++t) {
            const auto x = random_vector(v, 4, rng);
            CHECK(braiding_apply(1, braiding_apply(1, x)) == x);
            CHECK(braiding_apply(1, braiding_apply(2, braiding_apply(1, x))) ==
                  braiding_apply(2, braiding_apply(1, braiding_apply(2, x))));
            CHECK(braiding_apply(1, braiding_apply(3, x)) == braiding_apply(3, braiding_apply(1, x)));
        }
    }
}

TEST_CASE("closed permutation formula matches products of transpositions") {
    std::mt19937_64 rng(31);
    for (const auto& v : spaces()) {
        for (int t = 0; t < 20; ++t) {
            const auto x = random_vector(v, 4, rng);
            const auto p = random_permutation(4, rng), q = random_permutation(4, rng);
            CHECK(permutation_apply(p, x) == permutation_apply_by_transpositions(p, x));
            CHECK(permutation_apply(compose(p, q), x) == permutation_apply(p, permutation_apply(q, x)));
        }
    }
}

TEST_CASE("permutation sign and enumeration") {
    CHECK(all_permutations(4).size() == 24);
    CHECK(permutation_sign(identity_permutation(3)) == 1);
    CHECK(permutation_sign({1, 0, 2}) == -1);
    CHECK(permutation_sign({1, 2, 0}) == 1);
}

TEST_CASE("diagonal action counts letters") {
    const auto v = make_super(2, 1);
    const Word w = {0, 2, 0, 1};
    for (int a = 0; a < 3; ++a) {
        const long n = std::count(w.begin(), w.end(), a);
        CHECK(gl_act_tensor(unit(v, a, a), TensorVector::basis(v, w)) == TensorVector::basis(v, w, Scalar(n)));
    }
    CHECK(word_weight(*make_super(1, 1), {0, 0}) == Weight::from_ints({2, 0}));
}

TEST_CASE("tensor action is a representation commuting with the braiding") {
    std::mt19937_64 rng(37);
    for (const auto& v : spaces()) {
        const int n = v->dim();
        std::uniform_int_distribution<int> idx(0, n - 1);
        for (int t = 0; t < 20; ++t) {
            const auto x = random_vector(v, 3, rng);
            const GlElement a = unit(v, idx(rng), idx(rng)), b = unit(v, idx(rng), idx(rng));
            const Scalar w = v->omega(*a.homogeneous_degree(), *b.homogeneous_degree()).scalar();
            CHECK(gl_act_tensor(bracket(a, b), x) ==
                  gl_act_tensor(a, gl_act_tensor(b, x)) - w * gl_act_tensor(b, gl_act_tensor(a, x)));
            const auto p = random_permutation(3, rng);
            CHECK(gl_act_tensor(a, permutation_apply(p, x)) == permutation_apply(p, gl_act_tensor(a, x)));
        }
    }
}

TEST_CASE("total symmetrizers") {
    auto [plus, minus] = total_symmetrizers(3);
    CHECK(plus.terms.size() == 6);
    CHECK(minus.terms.size() == 6);
    for (const auto& [p, c] : plus.terms) CHECK(c == Scalar(permutation_sign(p)));
    for (const auto& [p, c] : minus.terms) CHECK(c == Scalar(1));
    // Sigma^- on a purely even tensor symmetrizes, Sigma^+ kills a repeated even letter.
    const auto v = make_super(1, 0);
    const auto t = TensorVector::basis(v, {0, 0, 0});
    CHECK(sym_apply(minus, t) == Scalar(6) * t);
    CHECK(sym_apply(plus, t).is_zero());
}

TEST_CASE("Young symmetrizer of a row") {
    const auto y = young_parts(Partition({3}));
    CHECK(y.rows.size() == 1);
    CHECK(y.columns.size() == 3);
    CHECK(young_symmetrizer(Partition({3})).terms == total_symmetrizers(3).second.terms);
    std::mt19937_64 rng(41);
    const auto v = make_super(1, 2);
    const auto x = random_vector(v, 3, rng);
    for (const auto& l : partitions_of(3)) CHECK(apply_young(young_parts(l), x) == sym_apply(young_symmetrizer(l), x));
}

TEST_CASE("highest weight vectors on gl(1|1)") {
    const auto v = make_super(1, 1);
    const auto h2 = highest_weight_vector(v, Partition({2}));
    CHECK_FALSE(h2.is_zero());
    CHECK(h2.weight() == Weight::from_ints({2, 0}));
    CHECK(is_highest_weight(h2));
    const auto h11 = highest_weight_vector(v, Partition({1, 1}));
    CHECK_FALSE(h11.is_zero());
    CHECK(h11.weight() == Weight::from_ints({1, 1}));
    CHECK(is_highest_weight(h11));
    CHECK_THROWS_AS(highest_weight_vector(make_super(1, 0), Partition({1, 1})), DomainError);
}

TEST_CASE("Sym orbit of a highest weight vector is the Specht module") {
    for (const auto& v : {make_super(1, 1), make_super(2, 1), make_z2z2({1, 1, 0, 1})}) {
        for (int r = 1; r <= 4; ++r)
            for (const auto& l : partitions_of(r)) {
                if (!in_hook(l, v->m_plus(), v->m_minus())) continue;
                const auto h = highest_weight_vector(v, l);
                CHECK(sym_orbit_rank(h) == count_standard_tableaux(l));
                CHECK(h.weight() == lambda_sharp(l, v->m_plus(), v->m_minus()));
            }
    }
}

TEST_CASE("Schur-Weyl table of gl(1|1) squared") {
    const auto t = schur_weyl_table(make_super(1, 1), 2);
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0].lambda == Partition({2}));
    CHECK(t.rows[0].sharp == Weight::from_ints({2, 0}));
    CHECK(t.rows[0].k == 2);
    CHECK(t.rows[0].f == 1);
    CHECK(t.rows[1].lambda == Partition({1, 1}));
    CHECK(t.rows[1].sharp == Weight::from_ints({1, 1}));
    CHECK(t.rows[1].k == 2);
    CHECK(t.total == 4);
    CHECK(t.ok());
}

TEST_CASE("Schur-Weyl of the natural module") {
    const auto t = schur_weyl_table(make_super(2, 1), 1);
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0].lambda == Partition({1}));
    CHECK(t.rows[0].sharp == Weight::from_ints({1, 0, 0}));
}

TEST_CASE("purely even Schur-Weyl is classical") {
    const auto v = make_super(3, 0);
    for (int r = 1; r <= 4; ++r) {
        const auto t = schur_weyl_table(v, r);
        CHECK(t.ok());
        for (const auto& row : t.rows) CHECK(row.k == dim_glN(row.lambda, 3));
    }
}

TEST_CASE("Schur-Weyl parallel and serial tables agree") {
    const auto v = make_z2z2({1, 1, 1, 0});
    const auto a = schur_weyl_table(v, 4, 1000000, true), b = schur_weyl_table(v, 4, 1000000, false);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].lambda == b.rows[i].lambda);
        CHECK(a.rows[i].k == b.rows[i].k);
    }
    CHECK(a.total == b.total);
}

TEST_CASE("word cap is enforced") { CHECK_THROWS_AS(schur_weyl_table(make_super(2, 2), 6, 1000), ResourceError); }

TEST_CASE("dual module") {
    for (const auto& v : spaces()) {
        const int n = v->dim();
        // e^(last) is a highest weight vector of weight -eps_last.
        const DualVector top = {{n - 1, Scalar(1)}};
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) CHECK(dual_act(unit(v, a, b), top).empty());
        for (int a = 0; a < n; ++a) {
            const DualVector w = {{a, Scalar(1)}};
            CHECK(dual_act(unit(v, a, a), w) == DualVector{{a, Scalar(-1)}});
        }
        // Contragredient pairing: <X w, u> = -omega(dX, dw) <w, X u>.
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (int d = 0; d < n; ++d) {
                        const GlElement x = unit(v, a, b);
                        const DualVector w = {{c, Scalar(1)}};
                        const std::map<int, Scalar> u = {{d, Scalar(1)}};
                        const Scalar s = v->omega(v->unit_degree(a, b), -v->degree(c)).scalar();
                        CHECK(dual_pair(dual_act(x, w), u) == -s * dual_pair(w, natural_act(x, u)));
                    }
        const MixedTensor c = canonical_invariant(*v);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) CHECK(mixed_act(unit(v, a, b), c).empty());
    }
}

TEST_CASE("lowest weight of the natural module") {
    const auto v = make_super(2, 1);
    const auto low = lowest_weight_vector(highest_weight_vector(v, Partition({1})));
    CHECK(low.weight() == Weight::from_ints({0, 0, 1}));
    const auto basis = lowering_closure(highest_weight_vector(v, Partition({1})), {{1, 0}, {2, 0}, {2, 1}});
    CHECK(basis.size() == 3);
}
