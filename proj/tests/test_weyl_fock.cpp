#include <doctest.h>

#include <random>

#include "cgl/error.hpp"
#include "cgl/howe.hpp"
#include "cgl/presets.hpp"

using namespace cgl;

namespace {

// Coefficients of (1+t)^odd / (1-t)^even up to t^d.
std::vector<std::uint64_t> hilbert_series(int even, int odd, int d) {
    std::vector<std::uint64_t> s(static_cast<std::size_t>(d + 1), 0);
    s[0] = 1;
    for (int k = 0; k < odd; ++k)
        for (int i = d; i >= 1; --i) s[static_cast<std::size_t>(i)] += s[static_cast<std::size_t>(i - 1)];
    for (int k = 0; k < even; ++k)
        for (int i = 1; i <= d; ++i) s[static_cast<std::size_t>(i)] += s[static_cast<std::size_t>(i - 1)];
    return s;
}

WeylAlgebra::Element random_element(const WeylAlgebra& w, std::mt19937_64& rng, int len) {
    std::uniform_int_distribution<int> g(0, w.ngens() - 1), c(-2, 2);
    WeylAlgebra::Element u = w.one();
    for (int i = 0; i < len; ++i) u = w.times_generator(u, g(rng));
    return scale(u, Scalar(c(rng) == 0 ? 1 : c(rng)));
}

std::vector<SpacePtr> spaces() {
    return {make_super(1, 1), make_super(2, 1), make_glq(1, 1), make_z2z2({1, 0, 1, 1}), make_green(2)};
}

}  // namespace

TEST_CASE("canonical commutation relation") {
    for (const auto& v : spaces()) {
        const WeylAlgebra w(v, 2);
        for (int a = 0; a < v->dim(); ++a)
            for (int r = 0; r < 2; ++r) {
                const int x = w.x_id(a, r), d = w.d_id(a, r);
                const Scalar s = v->omega(-v->degree(a), v->degree(a)).scalar();
                CHECK(w.multiply(w.gen(d), w.gen(x)) == scale(w.multiply(w.gen(x), w.gen(d)), s) + w.one());
            }
    }
}

TEST_CASE("odd generators square to zero") {
    const auto v = make_super(1, 1);
    const WeylAlgebra w(v, 1);
    CHECK(w.multiply(w.gen(w.x_id(1, 0)), w.gen(w.x_id(1, 0))).empty());
    CHECK(w.multiply(w.gen(w.d_id(1, 0)), w.gen(w.d_id(1, 0))).empty());
    CHECK_FALSE(w.multiply(w.gen(w.x_id(0, 0)), w.gen(w.x_id(0, 0))).empty());
}

TEST_CASE("normal ordering is associative") {
    std::mt19937_64 rng(43);
    for (const auto& v : spaces()) {
        const WeylAlgebra w(v, 2);
        for (int t = 0; t < 30; ++t) {
            const auto a = random_element(w, rng, 2), b = random_element(w, rng, 2), c = random_element(w, rng, 2);
            CHECK(w.multiply(w.multiply(a, b), c) == w.multiply(a, w.multiply(b, c)));
        }
    }
}

TEST_CASE("Fock derivations") {
    const auto v = make_super(2, 1);
    const WeylAlgebra w(v, 2);
    const auto& fa = w.fock_algebra();
    const FockVector one = {{fa.unit(), Scalar(1)}};
    for (int a = 0; a < 3; ++a)
        for (int r = 0; r < 2; ++r)
            for (int b = 0; b < 3; ++b)
                for (int s = 0; s < 2; ++s) {
                    const FockVector xb = fock_generator(w, w.x_id(b, s), one);
                    const FockVector got = fock_generator(w, w.d_id(a, r), xb);
                    CHECK(got == (a == b && r == s ? one : FockVector{}));
                }
    // Leibniz rule with the omega twist.
    const FockVector x0 = fock_generator(w, w.x_id(2, 0), one);
    const FockVector x1 = fock_generator(w, w.x_id(2, 1), one);
    const FockVector x01 = fa.multiply(x0, x1);
    const FockVector d = fock_generator(w, w.d_id(2, 0), x01);
    const Scalar tw = v->omega(-v->degree(2), v->degree(2)).scalar();
    FockVector expect;
    for (const auto& [m, c] : x1) expect[m] = c;
    CHECK(d == expect);
    const FockVector d2 = fock_generator(w, w.d_id(2, 1), x01);
    FockVector expect2;
    for (const auto& [m, c] : x0) expect2[m] = tw * c;
    CHECK(d2 == expect2);
}

TEST_CASE("Fock action by generators matches normal ordering") {
    std::mt19937_64 rng(47);
    for (const auto& v : spaces()) {
        const WeylAlgebra w(v, 1);
        const FockVector one = {{w.fock_algebra().unit(), Scalar(1)}};
        for (int t = 0; t < 30; ++t) {
            const auto u = random_element(w, rng, 3);
            const auto f = fock_apply(w, random_element(w, rng, 3), one);
            CHECK(fock_apply(w, u, f) == fock_apply_by_normal_order(w, u, f));
            const auto u2 = random_element(w, rng, 2);
            CHECK(fock_apply(w, w.multiply(u, u2), f) == fock_apply(w, u, fock_apply(w, u2, f)));
        }
        CHECK(fock_apply(w, w.one(), one) == one);
    }
}

TEST_CASE("Fock relations and dual pair") {
    for (const auto& v : spaces()) {
        for (int n = 1; n <= 2; ++n) {
            const WeylAlgebra w(v, n);
            CHECK(check_fock_relations(w, 3).ok());
            const DualPairReport r = check_dual_pair(w);
            CHECK(r.ok());
            CHECK(r.commutant_checked == static_cast<std::size_t>(n * n * v->dim() * v->dim()));
            CHECK(check_level2_invariants(w).ok());
        }
    }
}

TEST_CASE("gl(V) image reproduces the colour bracket") {
    const auto v = make_z2z2({1, 1, 0, 1});
    const WeylAlgebra w(v, 2);
    const auto g = dual_pair_generators(w);
    const int n = v->dim();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    const auto x = GlElement::unit(v, a, b), y = GlElement::unit(v, c, d);
                    CHECK(w.bracket(gl_to_weyl(g, x), gl_to_weyl(g, y)) == gl_to_weyl(g, bracket(x, y)));
                }
}

TEST_CASE("Howe sweep examples") {
    auto rows = howe_dimension_sweep(make_super(1, 1), 1, 2);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].formula == 1);
    CHECK(rows[0].lambdas == std::vector<Partition>{Partition()});
    CHECK(rows[2].formula == 2);
    CHECK(rows[2].lambdas == std::vector<Partition>{Partition({2})});
    const auto dual = howe_dual_sweep(make_super(1, 1), 1, 2);
    CHECK(dual[2].enumerated == 2);
    const auto v = make_super(2, 1);
    CHECK(howe_dual_sweep(v, 3, 1)[1].enumerated == 9);
}

TEST_CASE("Howe sweep against the Hilbert series") {
    for (const auto& v : spaces()) {
        for (int n = 1; n <= 3; ++n) {
            const auto s = hilbert_series(v->m_plus() * n, v->m_minus() * n, 5);
            const auto rows = howe_dimension_sweep(v, n, 5);
            const auto dual = howe_dual_sweep(v, n, 5);
            for (int d = 0; d <= 5; ++d) {
                CHECK(rows[static_cast<std::size_t>(d)].ok());
                CHECK(rows[static_cast<std::size_t>(d)].formula == s[static_cast<std::size_t>(d)]);
                CHECK(dual[static_cast<std::size_t>(d)].ok());
                CHECK(dual[static_cast<std::size_t>(d)].enumerated == s[static_cast<std::size_t>(d)]);
            }
        }
    }
}

TEST_CASE("serial and parallel sweeps agree") {
    const auto v = make_super(2, 1);
    const auto a = howe_dimension_sweep(v, 2, 4, true), b = howe_dimension_sweep(v, 2, 4, false);
    for (std::size_t d = 0; d < a.size(); ++d) {
        CHECK(a[d].enumerated == b[d].enumerated);
        CHECK(a[d].lambdas == b[d].lambdas);
    }
}

TEST_CASE("joint highest weight spaces are one dimensional") {
    for (const auto& v : {make_super(1, 1), make_super(2, 1), make_glq(1, 1)}) {
        for (int d = 0; d <= 3; ++d)
            for (const auto& c : howe_highest_weights(v, 2, d)) {
                CHECK(c.joint_highest_dim == 1);
                CHECK(c.weight_space_dim >= 1);
            }
    }
}

TEST_CASE("invariant dimensions") {
    for (const auto& v : {make_super(1, 1), make_super(2, 1), make_green(2)}) {
        for (auto [n, n2] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
            CHECK(invariant_dimension(v, n, n2, 0).kernel_dim == 1);
            const auto r1 = invariant_dimension(v, n, n2, 1);
            CHECK(r1.kernel_dim == static_cast<std::size_t>(n * n2));
            CHECK(r1.ok());
        }
    }
    const auto r = invariant_dimension(make_super(1, 1), 1, 1, 2);
    CHECK(r.kernel_dim == 1);
    CHECK(r.expected == 1);
    CHECK(r.ok());
    CHECK_THROWS_AS(invariant_dimension(make_super(2, 1), 2, 2, 3, 10), ResourceError);
}

TEST_CASE("S(V* (x) V') decomposition") {
    const auto v = make_super(1, 1);
    const auto rows = glvv_decomposition(v, v, 2);
    REQUIRE(rows.size() == 3);
    CHECK(rows[1].dimension == 4);
    CHECK(rows[2].dimension == 8);
    CHECK(rows[2].decomposition == 8);
    CHECK(rows[2].lambdas == std::vector<Partition>{Partition({2}), Partition({1, 1})});
    for (const auto& w : {make_super(2, 1), make_z2z2({1, 1, 0, 0})}) {
        const auto r = glvv_decomposition(v, w, 3);
        CHECK(r[1].dimension == static_cast<std::uint64_t>(v->dim() * w->dim()));
        for (const auto& row : r) CHECK(row.ok());
    }
    // With V' purely even of dimension N this is the Howe sweep of V^N.
    const auto howe = howe_dimension_sweep(make_super(2, 1), 2, 4);
    const auto glvv = glvv_decomposition(make_super(2, 1), make_super(2, 0), 4);
    for (std::size_t d = 0; d <= 4; ++d) {
        CHECK(glvv[d].dimension == howe[d].formula);
        CHECK(glvv[d].lambdas == howe[d].lambdas);
    }
}

TEST_CASE("glq relations") {
    for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
        const auto r = glq_relations_check(m, n, 2, 4);
        CHECK(r.factor_ok);
        CHECK(r.relations_checked > 0);
        CHECK(r.relations_failed == 0);
        CHECK(r.ok());
    }
}
