#include <doctest.h>

#include <random>

#include "cgl/error.hpp"
#include "cgl/gl_algebra.hpp"
#include "cgl/presets.hpp"

using namespace cgl;

namespace {

GlElement unit(const SpacePtr& v, int a, int b) { return GlElement::unit(v, a, b); }

// Random combination of matrix units sharing one degree, built from a
// random seed unit and every other unit of the same degree.
GlElement random_homogeneous(const SpacePtr& v, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> idx(0, v->dim() - 1), c(-3, 3);
    const int a0 = idx(rng), b0 = idx(rng);
    const Degree d = v->unit_degree(a0, b0);
    GlElement x(v);
    for (int a = 0; a < v->dim(); ++a)
        for (int b = 0; b < v->dim(); ++b)
            if (v->unit_degree(a, b) == d) x.add(a, b, Scalar(c(rng)));
    x.add(a0, b0, Scalar(1));
    return x;
}

std::vector<SpacePtr> small_spaces() {
    return {make_super(1, 1), make_super(2, 1), make_glq(1, 1), make_glq(1, 2), make_z2z2({1, 1, 1, 0}),
            make_green(3)};
}

}  // namespace

TEST_CASE("Cartan bracket") {
    for (const auto& v : small_spaces()) {
        for (int a = 0; a < v->dim(); ++a)
            for (int c = 0; c < v->dim(); ++c)
                for (int d = 0; d < v->dim(); ++d) {
                    const int k = (a == c) - (a == d);
                    CHECK(bracket(unit(v, a, a), unit(v, c, d)) == Scalar(k) * unit(v, c, d));
                }
    }
}

TEST_CASE("diagonal units commute with themselves") {
    const auto v = make_super(2, 2);
    for (int a = 0; a < v->dim(); ++a) CHECK(bracket(unit(v, a, a), unit(v, a, a)).is_zero());
}

TEST_CASE("gl(1|1) odd bracket") {
    const auto v = make_super(1, 1);
    CHECK(v->omega(v->unit_degree(0, 1), v->unit_degree(1, 0)) == OmegaValue{-1, 0});
    CHECK(bracket(unit(v, 0, 1), unit(v, 1, 0)) == unit(v, 0, 0) + unit(v, 1, 1));
}

TEST_CASE("q-twisted bracket on glq(1|1)") {
    const auto v = make_glq(1, 1);
    const Scalar w = v->omega(v->unit_degree(0, 1), v->unit_degree(1, 0)).scalar();
    // E12 E21 = E11 and E21 E12 = E22.
    CHECK(bracket(unit(v, 0, 1), unit(v, 1, 0)) == unit(v, 0, 0) - w * unit(v, 1, 1));
    CHECK(bracket(unit(v, 0, 1), unit(v, 1, 0)) == bracket_via_products(unit(v, 0, 1), unit(v, 1, 0)));
}

TEST_CASE("Jacobi and skew defects vanish on all basis triples") {
    for (const auto& v : small_spaces()) {
        const int n = v->dim();
        std::size_t checked = 0, bad = 0;
        for (int i = 0; i < n * n; ++i)
            for (int j = 0; j < n * n; ++j) {
                const GlElement x = unit(v, i / n, i % n), y = unit(v, j / n, j % n);
                if (!skew_defect(x, y).is_zero()) ++bad;
                if (!(bracket(x, y) == bracket_via_products(x, y))) ++bad;
                for (int k = 0; k < n * n; ++k) {
                    if (!jacobi_defect(x, y, unit(v, k / n, k % n)).is_zero()) ++bad;
                    ++checked;
                }
            }
        CHECK(checked == static_cast<std::size_t>(n * n * n * n * n * n));
        CHECK(bad == 0);
    }
}

TEST_CASE("Jacobi on random homogeneous combinations") {
    std::mt19937_64 rng(17);
    for (const auto& v : small_spaces()) {
        for (int t = 0; t < 30; ++t) {
            const GlElement x = random_homogeneous(v, rng), y = random_homogeneous(v, rng),
                            z = random_homogeneous(v, rng);
            CHECK(jacobi_defect(x, y, z).is_zero());
            CHECK(skew_defect(x, y).is_zero());
        }
    }
}

TEST_CASE("inhomogeneous arguments are refused where homogeneity is required") {
    const auto v = make_super(1, 1);
    const GlElement x = unit(v, 0, 1) + unit(v, 0, 0);
    CHECK_FALSE(x.homogeneous_degree().has_value());
    CHECK_THROWS_AS(jacobi_defect(x, unit(v, 0, 0), unit(v, 1, 1)), PreconditionError);
    CHECK(x.homogeneous_parts().size() == 2);
    CHECK_THROWS_AS(bracket(unit(v, 0, 1), unit(make_super(2, 0), 0, 1)), PreconditionError);
}

TEST_CASE("positive roots") {
    auto r = positive_roots(*make_super(1, 1));
    CHECK(r.even.empty());
    REQUIRE(r.odd.size() == 1);
    CHECK(r.odd[0] == Weight::from_ints({1, -1}));
    r = positive_roots(*make_super(2, 1));
    CHECK(r.even.size() == 1);
    CHECK(r.odd.size() == 2);
    CHECK(positive_roots(*make_super(2, 2)).odd.size() == 4);
    CHECK(positive_roots(*make_super(3, 2)).even.size() == 4);
}

TEST_CASE("rho") {
    CHECK(rho(*make_super(1, 1)) == Weight({Rational(-1, 2), Rational(1, 2)}));
    CHECK(rho(*make_super(2, 1)) == Weight::from_ints({0, -1, 1}));
    const auto v = make_super(1, 1);
    CHECK(weight_inner(*v, rho(*v), epsilon(*v, 0) - epsilon(*v, 1)) == 0);
    // (rho, eps_i - eps_r') = M+ - r - i + 1
    for (auto [m, n] : {std::pair{2, 3}, {3, 2}, {2, 2}}) {
        const auto s = make_super(m, n);
        for (int i = 1; i <= m; ++i)
            for (int r = 1; r <= n; ++r)
                CHECK(weight_inner(*s, rho(*s), epsilon(*s, i - 1) - epsilon(*s, m + r - 1)) == m - r - i + 1);
    }
}

TEST_CASE("signed inner product on the epsilon basis") {
    const auto v = make_super(1, 1);
    CHECK(weight_inner(*v, epsilon(*v, 0), epsilon(*v, 0)) == 1);
    CHECK(weight_inner(*v, epsilon(*v, 1), epsilon(*v, 1)) == -1);
    CHECK(weight_inner(*v, epsilon(*v, 0), epsilon(*v, 1)) == 0);
}

TEST_CASE("invariant form and supertrace") {
    const auto v = make_super(1, 1);
    CHECK(bilinear_form(unit(v, 0, 1), unit(v, 1, 0)) == Scalar(1));
    for (const auto& s : {make_super(3, 1), make_super(1, 3), make_z2z2({1, 2, 1, 0})}) {
        GlElement id(s);
        for (int a = 0; a < s->dim(); ++a) id.add(a, a, Scalar(1));
        CHECK(supertrace(id) == Scalar(s->m_plus() - s->m_minus()));
    }
    std::mt19937_64 rng(23);
    for (const auto& s : small_spaces()) {
        for (int t = 0; t < 30; ++t) {
            const GlElement x = random_homogeneous(s, rng), y = random_homogeneous(s, rng),
                            z = random_homogeneous(s, rng);
            CHECK(supertrace(bracket(x, y)).is_zero());
            CHECK(bilinear_form(bracket(x, y), z) == bilinear_form(x, bracket(y, z)));
        }
    }
}

TEST_CASE("Weyl orbit") {
    const auto v = make_super(2, 1);
    const auto o = weyl_orbit(*v, Weight::from_ints({1, 0, 5}));
    CHECK(o == std::set<Weight>{Weight::from_ints({1, 0, 5}), Weight::from_ints({0, 1, 5})});
    CHECK(weyl_orbit(*v, Weight::from_ints({2, 2, 1})).size() == 1);
    const auto w = make_super(3, 2);
    CHECK(weyl_orbit(*w, Weight::from_ints({3, 1, 0, 2, 1})).size() == 12);
    CHECK(weyl_orbit(*w, Weight::from_ints({3, 1, 1, 2, 2})).size() == 3);
}

TEST_CASE("PBW dimension of the odd nilradical") {
    CHECK(pbw_dimension_nilradical(*make_super(1, 1)) == 2);
    CHECK(pbw_dimension_nilradical(*make_super(2, 2)) == 16);
    CHECK(pbw_dimension_nilradical(*make_super(3, 0)) == 1);
}
