#include <doctest.h>

#include <random>

#include "cgl/error.hpp"
#include "cgl/gram.hpp"
#include "cgl/presets.hpp"
#include "cgl/reps.hpp"

using namespace cgl;

namespace {

Weight w(std::initializer_list<Rational> c) { return Weight(std::vector<Rational>(c)); }

HighestWeight hw(const SpacePtr& v, Weight l) { return HighestWeight(v, std::move(l)); }

// Weight of the supertrace character: +1 on even, -1 on odd coordinates.
Weight character(const GradedSpace& v) {
    Weight e(static_cast<std::size_t>(v.dim()));
    for (int a = 0; a < v.dim(); ++a) e[static_cast<std::size_t>(a)] = v.parity(a);
    return e;
}

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> n(-12, 12), d(1, 6);
    Rational x(n(rng), d(rng));
    x.canonicalize();
    return x;
}

// Weyl dimension formula for a dominant block.
Rational block_dim(const std::vector<Rational>& l) {
    Rational d = 1;
    for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = i + 1; j < l.size(); ++j) d *= (l[i] - l[j] + Rational(static_cast<long>(j - i))) / Rational(static_cast<long>(j - i));
    return d;
}

// Lowest weight of L(lambda_sharp) inside the tensor power: the weight of
// the lowering closure that minimises a regular dominant functional.
Weight lowest_tensor_weight(const SpacePtr& v, const Partition& l) {
    const auto top = highest_weight_vector(v, l);
    std::vector<std::pair<int, int>> lower;
    for (int a = 0; a < v->dim(); ++a)
        for (int b = 0; b < a; ++b) lower.emplace_back(a, b);
    std::optional<Weight> best;
    Rational best_val;
    for (const auto& u : lowering_closure(top, lower)) {
        const Weight x = *u.weight();
        Rational f = 0;
        for (int a = 0; a < v->dim(); ++a) f += Rational(v->dim() - a) * x[static_cast<std::size_t>(a)];
        if (!best || f < best_val) {
            best = x;
            best_val = f;
        }
    }
    return *best;
}

}  // namespace

TEST_CASE("finite dimensionality") {
    const auto v = make_super(2, 1);
    for (int r = 0; r <= 4; ++r)
        for (const auto& l : partitions_of(r))
            if (in_hook(l, 2, 1)) CHECK(is_finite_dimensional(hw(v, lambda_sharp(l, 2, 1))));
    std::mt19937_64 rng(53);
    for (int i = 0; i < 20; ++i)
        CHECK(is_finite_dimensional(hw(make_super(1, 1), w({random_rational(rng), random_rational(rng)}))));
    CHECK_FALSE(is_finite_dimensional(hw(make_super(2, 0), Weight::from_ints({0, 1}))));
    CHECK_FALSE(is_finite_dimensional(hw(v, w({Rational(1, 2), 0, 0}))));
    CHECK(is_finite_dimensional(hw(v, w({Rational(3, 2), Rational(1, 2), Rational(-7, 3)}))));
    CHECK_THROWS_AS(hw(v, Weight::from_ints({1, 0})), ShapeError);
}

TEST_CASE("typicality") {
    std::mt19937_64 rng(59);
    const auto v = make_super(1, 1);
    for (int i = 0; i < 50; ++i) {
        const Rational a = random_rational(rng), b = random_rational(rng);
        const Typicality t = typicality(hw(v, w({a, b})));
        CHECK(t.chi == a + b);
        CHECK(t.typical == (a + b != 0));
    }
    CHECK_FALSE(typicality(hw(v, Weight::from_ints({0, 0}))).typical);
    const Typicality e = typicality(hw(make_super(3, 0), Weight::from_ints({2, 1, 0})));
    CHECK(e.typical);
    CHECK(e.chi == 1);
    // gl(2|1): (lambda + rho, eps_i - eps_1') = lambda_i + lambda_1' + 2 - i.
    const auto u = make_super(2, 1);
    for (int i = 0; i < 30; ++i) {
        const Rational c = random_rational(rng), x = random_rational(rng);
        const Weight l = w({x + 2, x, c});
        CHECK(typicality(hw(u, l)).chi == (l[0] + l[2] + 1) * (l[1] + l[2]));
    }
}

TEST_CASE("Kac module dimensions") {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 10; ++i)
        CHECK(kac_dimension(hw(make_super(1, 1), w({random_rational(rng), random_rational(rng)}))) == 2);
    CHECK(kac_dimension(hw(make_super(1, 1), lambda_sharp(Partition({2}), 1, 1))) == 2);
    CHECK(kac_dimension(hw(make_super(3, 0), Weight::from_ints({2, 1, 0}))) == 8);
    for (auto [m, n] : {std::pair{2, 1}, {1, 2}, {2, 2}}) {
        const auto v = make_super(m, n);
        for (int t = 0; t < 20; ++t) {
            std::vector<Rational> lp, lm, all;
            Rational x = random_rational(rng);
            for (int i = 0; i < m; ++i) {
                lp.insert(lp.begin(), x);
                x += std::uniform_int_distribution<int>(0, 3)(rng);
            }
            x = random_rational(rng);
            for (int i = 0; i < n; ++i) {
                lm.insert(lm.begin(), x);
                x += std::uniform_int_distribution<int>(0, 3)(rng);
            }
            all = lp;
            all.insert(all.end(), lm.begin(), lm.end());
            const auto h = hw(v, Weight(all));
            REQUIRE(h.dominant());
            const Rational levi = block_dim(lp) * block_dim(lm);
            CHECK(Rational(static_cast<unsigned long>(levi_dimension(h))) == levi);
            CHECK(kac_dimension(h) == (std::uint64_t{1} << (m * n)) * levi_dimension(h));
        }
    }
    CHECK_THROWS_AS(kac_dimension(hw(make_super(2, 0), Weight::from_ints({0, 1}))), DomainError);
}

TEST_CASE("typical tensor weights have Kac dimension k(lambda)") {
    for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
        const auto v = make_super(m, n);
        for (int r = 0; r <= 4; ++r)
            for (const auto& l : partitions_of(r)) {
                if (!in_hook(l, m, n)) continue;
                const auto h = hw(v, lambda_sharp(l, m, n));
                const std::uint64_t k = count_hook_tableaux(l, m, n);
                if (typicality(h).typical) CHECK(kac_dimension(h) == k);
                else CHECK(k < kac_dimension(h));
            }
    }
}

TEST_CASE("Casimir eigenvalues") {
    CHECK(casimir_eigenvalue(hw(make_super(2, 1), Weight::from_ints({0, 0, 0}))) == 0);
    CHECK(casimir_eigenvalue(hw(make_super(1, 1), Weight::from_ints({1, 0}))) == 0);
    const auto c = casimir_check(make_super(1, 1), Partition({1}));
    CHECK(c.eigenvalue == 0);
    CHECK(c.defect == 0);
    // Omega = sum_ab parity(b) E_ab E_ba on the natural gl(2|0) module.
    const auto v = make_super(2, 0);
    GlElement omega(v);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            omega += Scalar(v->parity(b)) * matrix_product(GlElement::unit(v, a, b), GlElement::unit(v, b, a));
    const Scalar on_e1 = omega.coeff(0, 0);
    CHECK(on_e1 == Scalar(2));
    CHECK(omega.coeff(1, 0).is_zero());
    CHECK(Scalar(casimir_eigenvalue(hw(v, Weight::from_ints({1, 0})))) == on_e1);
    for (const auto& s : {make_super(2, 1), make_z2z2({1, 1, 1, 0}), make_super(1, 2)})
        for (int r = 1; r <= 3; ++r)
            for (const auto& l : partitions_of(r))
                if (in_hook(l, s->m_plus(), s->m_minus())) CHECK(casimir_check(s, l).defect == 0);
}

TEST_CASE("type I classification examples") {
    const auto v = make_super(1, 1);
    for (const Rational x : {Rational(1, 2), Rational(3, 2), Rational(7, 3), Rational(5)}) {
        const auto u = classify_unitarisable(hw(v, w({x, -x})), StarType::I);
        CHECK(u.unitarisable);
    }
    const auto bad = classify_unitarisable(hw(v, Weight::from_ints({-1, 0})), StarType::I);
    CHECK_FALSE(bad.unitarisable);
    CHECK(bad.boundary == -1);
    CHECK_FALSE(classify_unitarisable(hw(make_super(2, 1), Weight::from_ints({0, 1, 0})), StarType::I).unitarisable);
    CHECK_THROWS_AS(classify_unitarisable(hw(make_glq(1, 1), Weight::from_ints({1, 0})), StarType::I),
                    UnsupportedError);
}

TEST_CASE("tensor weights are unitarisable with a certificate") {
    for (const auto& v : {make_super(1, 1), make_super(2, 1), make_z2z2({1, 1, 1, 1}), make_green(2)}) {
        const int m = v->m_plus(), n = v->m_minus();
        for (int r = 0; r <= 4; ++r)
            for (const auto& l : partitions_of(r)) {
                if (!in_hook(l, m, n)) continue;
                const Weight s = lambda_sharp(l, m, n);
                const auto u = classify_unitarisable(hw(v, s), StarType::I);
                CHECK(u.unitarisable);
                REQUIRE(u.certificate.has_value());
                Weight rebuilt = lambda_sharp(u.certificate->mu, m, n);
                for (int a = 0; a < m + n; ++a)
                    rebuilt[static_cast<std::size_t>(a)] += a < m ? Rational(u.certificate->a - u.certificate->b) : Rational(-u.certificate->a);
                CHECK(rebuilt == s);
            }
    }
}

TEST_CASE("type I classification is invariant under character shifts") {
    std::mt19937_64 rng(67);
    const auto v = make_super(2, 1);
    for (int t = 0; t < 60; ++t) {
        const Rational c = random_rational(rng), x = random_rational(rng), a = random_rational(rng);
        const Weight l = w({x + std::uniform_int_distribution<int>(0, 2)(rng), x, c});
        const Weight shifted = l + a * character(*v);
        CHECK(classify_unitarisable(hw(v, l), StarType::I).unitarisable ==
              classify_unitarisable(hw(v, shifted), StarType::I).unitarisable);
        CHECK(unitarisable_by_conditions(hw(v, l)).unitarisable ==
              unitarisable_by_decomposition(hw(v, l)).unitarisable);
    }
}

TEST_CASE("dual weights") {
    const auto v = make_super(1, 1);
    const auto d = dual_weight(hw(v, Weight::from_ints({1, 0})));
    REQUIRE(d.has_value());
    CHECK(*d == Weight::from_ints({0, -1}));
    const auto u = classify_unitarisable(hw(v, Weight::from_ints({1, 0})), StarType::II);
    REQUIRE(u.dual_weight.has_value());
    CHECK(*u.dual_weight == Weight::from_ints({0, -1}));
    CHECK_FALSE(u.unitarisable);
    for (const auto& s : {make_super(1, 1), make_super(2, 1), make_super(1, 2)}) {
        const int m = s->m_plus(), n = s->m_minus();
        CHECK(*dual_weight(hw(s, lambda_sharp(Partition({1}), m, n))) == Rational(-1) * epsilon(*s, m + n - 1));
        for (int r = 1; r <= 3; ++r)
            for (const auto& l : partitions_of(r)) {
                if (!in_hook(l, m, n)) continue;
                const auto got = dual_weight(hw(s, lambda_sharp(l, m, n)));
                REQUIRE(got.has_value());
                CHECK(*got == Rational(-1) * lowest_tensor_weight(s, l));
                // A character shift moves the dual the opposite way.
                const Weight shifted = lambda_sharp(l, m, n) + Rational(1, 3) * character(*s);
                CHECK(*dual_weight(hw(s, shifted)) == *got - Rational(1, 3) * character(*s));
            }
    }
}

TEST_CASE("typical dual weights follow the longest Weyl element") {
    const auto v = make_super(2, 1);
    // Typical and generic: L(lambda) is the Kac module, whose lowest weight is
    // w0(lambda) - (M- sum of even eps) + (M+ sum of odd eps).
    const Weight l = w({Rational(7, 2), Rational(1, 2), Rational(1, 3)});
    REQUIRE(typicality(hw(v, l)).typical);
    const auto d = dual_weight(hw(v, l));
    REQUIRE(d.has_value());
    CHECK(*d == w({Rational(-1, 2) + 1, Rational(-7, 2) + 1, Rational(-1, 3) - 2}));
}

TEST_CASE("Gram matrices on gl(1|1)") {
    const auto v = make_super(1, 1);
    struct Case {
        Weight l;
        Rational entry;
        GramVerdict verdict;
    };
    for (const auto& c : {Case{Weight::from_ints({1, 0}), 1, GramVerdict::positive_definite},
                          Case{Weight::from_ints({0, 0}), 0, GramVerdict::singular},
                          Case{Weight::from_ints({-1, 0}), -1, GramVerdict::indefinite}}) {
        const GramReport r = gram_report(hw(v, c.l), 1);
        REQUIRE(r.blocks.size() == 2);
        CHECK(r.blocks[1].level == 1);
        CHECK(r.blocks[1].matrix == std::vector<std::vector<Rational>>{{c.entry}});
        CHECK(r.verdict == c.verdict);
    }
    std::mt19937_64 rng(71);
    for (int t = 0; t < 20; ++t) {
        const Rational a = random_rational(rng), b = random_rational(rng);
        const GramReport r = gram_report(hw(v, w({a, b})), 1);
        CHECK(r.blocks[1].matrix[0][0] == a + b);
        CHECK(r.radical_dim == (a + b == 0 ? 1u : 0u));
    }
}

TEST_CASE("Gram recursion on gl(1|2)") {
    // One even index: the vectors E_{s',1} ... E_{1',1} v span one-dimensional
    // weight spaces with <v_s, v_s> = (lambda + rho, eps_1 - eps_s') <v_{s-1}, v_{s-1}>.
    const auto v = make_super(1, 2);
    std::mt19937_64 rng(73);
    for (int t = 0; t < 20; ++t) {
        const Rational a = random_rational(rng), c = random_rational(rng);
        const Weight l = w({a, c + std::uniform_int_distribution<int>(0, 2)(rng), c});
        const auto h = hw(v, l);
        const Weight lr = l + rho(*v);
        auto pair = [&](int s) { return weight_inner(*v, lr, epsilon(*v, 0) - epsilon(*v, s)); };
        const GramReport r = gram_report(h, 2);
        const Weight top2 = l - 2 * epsilon(*v, 0) + epsilon(*v, 1) + epsilon(*v, 2);
        bool found = false;
        for (const auto& b : r.blocks) {
            if (!(b.weight == top2)) continue;
            found = true;
            REQUIRE(b.matrix.size() == 1);
            CHECK(b.matrix[0][0] == pair(1) * pair(2));
        }
        CHECK(found);
    }
}

TEST_CASE("Gram verdicts agree with the classification") {
    for (const auto& v : {make_super(1, 1), make_super(2, 1), make_super(1, 2)}) {
        std::mt19937_64 rng(79);
        for (int t = 0; t < 25; ++t) {
            std::vector<Rational> c(static_cast<std::size_t>(v->dim()));
            Rational x = random_rational(rng);
            for (int i = v->m_plus() - 1; i >= 0; --i) {
                c[static_cast<std::size_t>(i)] = x;
                x += std::uniform_int_distribution<int>(0, 2)(rng);
            }
            x = random_rational(rng);
            for (int i = v->dim() - 1; i >= v->m_plus(); --i) {
                c[static_cast<std::size_t>(i)] = x;
                x += std::uniform_int_distribution<int>(0, 2)(rng);
            }
            const auto h = hw(v, Weight(c));
            const GramReport r = gram_report(h, v->m_plus() * v->m_minus());
            CHECK(r.unitarisable() == classify_unitarisable(h, StarType::I).unitarisable);
            CHECK((r.radical_dim == 0) == typicality(h).typical);
            for (const auto& b : r.blocks)
                for (std::size_t i = 0; i < b.matrix.size(); ++i)
                    for (std::size_t j = 0; j < b.matrix.size(); ++j) CHECK(b.matrix[i][j] == b.matrix[j][i]);
        }
    }
}

TEST_CASE("Gram preconditions") {
    CHECK_THROWS_AS(gram_report(hw(make_glq(1, 1), Weight::from_ints({1, 0})), 1), UnsupportedError);
    CHECK_THROWS_AS(gram_report(hw(make_super(1, 1), Weight::from_ints({1, 0})), 2), DomainError);
    CHECK_THROWS_AS(gram_report(hw(make_super(1, 1), Weight::from_ints({1, 0})), -1), DomainError);
    CHECK_THROWS_AS(gram_report(hw(make_super(2, 1), Weight::from_ints({0, 1, 0})), 1), DomainError);
}

TEST_CASE("grid classification is identical in serial and parallel") {
    const auto v = make_super(2, 1);
    std::vector<Weight> ws;
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = -2; c <= 2; ++c) ws.push_back(w({Rational(a, 2), Rational(b, 2), Rational(c, 3)}));
    const auto p = classify_grid(v, ws, true), s = classify_grid(v, ws, false);
    REQUIRE(p.size() == s.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        CHECK(p[i].lambda == s[i].lambda);
        CHECK(p[i].dominant == s[i].dominant);
        CHECK(p[i].unitarisable == s[i].unitarisable);
    }
}
