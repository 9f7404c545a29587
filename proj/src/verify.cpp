#include "cgl/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "cgl/error.hpp"
#include "cgl/gram.hpp"
#include "cgl/howe.hpp"
#include "cgl/reps.hpp"
#include "cgl/tensor.hpp"
#include "cgl/weyl.hpp"

namespace cgl {

namespace {

constexpr std::size_t kMaxRecorded = 8;

class Recorder {
public:
    Recorder(std::string name, const GradedSpace* v) : start_(std::chrono::steady_clock::now()) {
        r_.name = std::move(name);
        if (v) r_.space = space_summary(*v);
    }
    void check(bool ok, const std::function<std::string()>& what) {
        ++r_.checks;
        if (ok) return;
        ++r_.failures;
        if (r_.failed.size() < kMaxRecorded) r_.failed.push_back(what());
    }
    SuiteResult done() {
        r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return r_;
    }

private:
    SuiteResult r_;
    std::chrono::steady_clock::time_point start_;
};

std::vector<Word> all_words(int dim, int r) {
    std::vector<Word> out;
    Word w(static_cast<std::size_t>(r), 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == r) {
            out.push_back(w);
            return;
        }
        for (int a = 0; a < dim; ++a) {
            w[static_cast<std::size_t>(pos)] = a;
            rec(pos + 1);
        }
    };
    rec(0);
    return out;
}

std::string word_str(const Word& w) {
    std::string s;
    for (int a : w) s += std::to_string(a);
    return s;
}

std::uint64_t power_of(int dim, int r) {
    std::uint64_t p = 1;
    for (int i = 0; i < r; ++i) p *= static_cast<std::uint64_t>(dim);
    return p;
}

}  // namespace

std::string space_summary(const GradedSpace& v) {
    std::ostringstream os;
    os << "Z^" << v.group().free_rank << "+Z2^" << v.group().torsion2_rank << " {";
    for (std::size_t i = 0; i < v.components().size(); ++i) {
        const auto& c = v.components()[i];
        os << (i ? ", " : "") << c.degree.str() << ":" << c.dim;
    }
    os << "} M+=" << v.m_plus() << " M-=" << v.m_minus();
    return os.str();
}

SuiteResult axioms_suite(SpacePtr v, int r_max) {
    Recorder rec("axioms", v.get());
    const CommutativeFactor& f = v->factor();
    const int dim = v->dim();

    std::set<Degree> seen;
    std::vector<Degree> degs;
    auto add = [&](const Degree& d) {
        if (seen.insert(d).second) degs.push_back(d);
    };
    for (int a = 0; a < dim; ++a) add(v->degree(a));
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) add(v->unit_degree(a, b));
    for (const auto& a : degs) {
        rec.check((f.value(a, a) * f.value(a, a)).is_one(), [&] { return "omega(a,a)^2 != 1 at " + a.str(); });
        for (const auto& b : degs) {
            rec.check((f.value(a, b) * f.value(b, a)).is_one(), [&] { return "omega(a,b)omega(b,a) != 1 at " + a.str() + "," + b.str(); });
            for (const auto& c : degs) {
                rec.check(f.value(a, b + c) == f.value(a, b) * f.value(a, c), [&] { return "omega(a,b+c) at " + a.str() + "," + b.str() + "," + c.str(); });
                rec.check(f.value(a + b, c) == f.value(a, c) * f.value(b, c), [&] { return "omega(a+b,c) at " + a.str() + "," + b.str() + "," + c.str(); });
            }
        }
    }

    std::vector<GlElement> units;
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) units.push_back(GlElement::unit(v, a, b));
    for (const auto& x : units)
        for (const auto& y : units) {
            rec.check(skew_defect(x, y).is_zero(), [&] { return "skew defect at " + x.str() + ", " + y.str(); });
            rec.check(bracket(x, y) == bracket_via_products(x, y), [&] { return "bracket routes differ at " + x.str() + ", " + y.str(); });
            for (const auto& z : units)
                rec.check(jacobi_defect(x, y, z).is_zero(), [&] { return "Jacobi defect at " + x.str() + ", " + y.str() + ", " + z.str(); });
        }

    for (int r = 2; r <= r_max; ++r) {
        const auto words = all_words(dim, r);
        const auto perms = r <= 4 ? all_permutations(r) : std::vector<Permutation>{};
        for (const auto& w : words) {
            const TensorVector t = TensorVector::basis(v, w);
            for (int i = 1; i < r; ++i) {
                rec.check(braiding_apply(i, braiding_apply(i, t)) == t, [&] { return "sigma_" + std::to_string(i) + "^2 on " + word_str(w); });
                if (i + 1 < r) {
                    auto lhs = braiding_apply(i, braiding_apply(i + 1, braiding_apply(i, t)));
                    auto rhs = braiding_apply(i + 1, braiding_apply(i, braiding_apply(i + 1, t)));
                    rec.check(lhs == rhs, [&] { return "braid relation at i=" + std::to_string(i) + " on " + word_str(w); });
                }
                for (int j = i + 2; j < r; ++j)
                    rec.check(braiding_apply(i, braiding_apply(j, t)) == braiding_apply(j, braiding_apply(i, t)),
                              [&] { return "far commutation " + std::to_string(i) + "," + std::to_string(j) + " on " + word_str(w); });
            }
            for (const auto& p : perms)
                rec.check(permutation_apply(p, t) == permutation_apply_by_transpositions(p, t),
                          [&] { return "permutation routes differ on " + word_str(w); });
        }
    }
    return rec.done();
}

SuiteResult sampling_suite(SpacePtr v, std::uint64_t seed, int samples) {
    Recorder rec("sampling", v.get());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coord(-5, 5);
    const CommutativeFactor& f = v->factor();
    auto random_degree = [&] {
        std::vector<std::int64_t> c(static_cast<std::size_t>(f.group().rank()));
        for (auto& x : c) x = coord(rng);
        return Degree(f.group(), c);
    };
    auto random_scalar = [&] {
        std::vector<Rational> num(3), den(2);
        for (auto& x : num) x = coord(rng);
        for (auto& x : den) x = coord(rng);
        if (den[0] == 0 && den[1] == 0) den[0] = 1;
        return Scalar::fraction(Laurent::from_coeffs(num, coord(rng)), Laurent::from_coeffs(den, coord(rng)));
    };
    for (int s = 0; s < samples; ++s) {
        const Degree a = random_degree(), b = random_degree(), c = random_degree();
        rec.check(f.value(a, b + c) == f.value(a, b) * f.value(a, c), [&] { return "omega(a,b+c) at " + a.str() + "," + b.str() + "," + c.str(); });
        rec.check(f.value(a + b, c) == f.value(a, c) * f.value(b, c), [&] { return "omega(a+b,c) at " + a.str() + "," + b.str() + "," + c.str(); });
        rec.check((f.value(a, b) * f.value(b, a)).is_one(), [&] { return "omega(a,b)omega(b,a) at " + a.str() + "," + b.str(); });
        rec.check(f.omega_parity(a) * f.omega_parity(a) == 1, [&] { return "parity at " + a.str(); });
        const Scalar x = random_scalar(), y = random_scalar(), z = random_scalar();
        if (!x.is_zero() && !y.is_zero())
            rec.check((x / y) * (y / x) == Scalar(1), [&] { return "(x/y)(y/x) != 1 for " + x.str() + ", " + y.str(); });
        rec.check(x * (y + z) == x * y + x * z, [&] { return "distributivity for " + x.str() + ", " + y.str() + ", " + z.str(); });
        rec.check(Scalar::parse(x.str()) == x, [&] { return "parse round trip for " + x.str(); });
    }
    return rec.done();
}

SuiteResult schur_weyl_suite(SpacePtr v, int r_max, std::uint64_t max_words) {
    Recorder rec("schur_weyl", v.get());
    for (int r = 1; r <= r_max; ++r) {
        if (power_of(v->dim(), r) > max_words) break;
        const SchurWeylTable t = schur_weyl_table(v, r, max_words);
        rec.check(t.total == t.expected, [&] {
            return "r=" + std::to_string(r) + ": sum k f = " + std::to_string(t.total) + " != " + std::to_string(t.expected);
        });
        for (const auto& row : t.rows)
            rec.check(row.hwv_nonzero && row.hwv_weight_ok && row.hwv_annihilated,
                      [&] { return "highest weight vector of " + row.lambda.str(); });
    }
    return rec.done();
}

SuiteResult howe_suite(SpacePtr v, int copies_max, int d_max, int hw_degree) {
    Recorder rec("howe", v.get());
    for (int n = 1; n <= copies_max; ++n) {
        for (const auto& row : howe_dimension_sweep(v, n, d_max))
            rec.check(row.ok(), [&] {
                return "N=" + std::to_string(n) + " d=" + std::to_string(row.degree) + ": " + std::to_string(row.formula) + "/" +
                       std::to_string(row.enumerated) + "/" + std::to_string(row.decomposition);
            });
        for (const auto& row : howe_dual_sweep(v, n, d_max))
            rec.check(row.ok(), [&] { return "dual N=" + std::to_string(n) + " d=" + std::to_string(row.degree); });
        WeylAlgebra w(v, n);
        auto rel = check_fock_relations(w, std::min(d_max, 2));
        rec.check(rel.ok(), [&] { return "Fock relations N=" + std::to_string(n) + ": " + std::to_string(rel.failed) + " failed"; });
        if (n <= 2)
            for (int d = 0; d <= hw_degree; ++d)
                for (const auto& h : howe_highest_weights(v, n, d))
                    rec.check(h.joint_highest_dim == 1, [&] {
                        return "joint highest weight space of " + h.lambda.str() + " has dim " + std::to_string(h.joint_highest_dim);
                    });
    }
    return rec.done();
}

SuiteResult fft_suite(SpacePtr v, int d_max) {
    Recorder rec("fft", v.get());
    const std::pair<int, int> pairs[] = {{1, 1}, {2, 1}, {2, 2}};
    for (const auto& [n, n2] : pairs)
        for (int d = 0; d <= d_max; ++d) {
            const InvariantReport r = invariant_dimension(v, n, n2, d);
            rec.check(r.ok(), [&] {
                return "(N,N')=(" + std::to_string(n) + "," + std::to_string(n2) + ") d=" + std::to_string(d) + ": kernel " +
                       std::to_string(r.kernel_dim) + ", expected " + std::to_string(r.expected) + ", z ranks " +
                       std::to_string(r.z_rank_field) + "/" + std::to_string(r.z_rank_bareiss);
            });
        }
    return rec.done();
}

SuiteResult glq_suite(int m, int n, int copies_max, int d_max) {
    Recorder rec("glq(" + std::to_string(m) + "|" + std::to_string(n) + ")", nullptr);
    for (int c = 1; c <= copies_max; ++c) {
        const GlqReport r = glq_relations_check(m, n, c, d_max);
        rec.check(r.factor_ok, [&] { return "factor values"; });
        rec.check(r.relations_failed == 0 && r.relations_checked > 0,
                  [&] { return "N=" + std::to_string(c) + ": " + std::to_string(r.relations_failed) + " relations failed"; });
        for (const auto& row : r.sweep)
            rec.check(row.ok(), [&] { return "N=" + std::to_string(c) + " d=" + std::to_string(row.degree) + " sweep"; });
    }
    return rec.done();
}

SuiteResult typicality_suite(SpacePtr v, int size_max) {
    Recorder rec("typicality", v.get());
    for (int s = 0; s <= size_max; ++s)
        for (const auto& l : partitions_of(s)) {
            if (!in_hook(l, v->m_plus(), v->m_minus())) continue;
            HighestWeight hw(v, lambda_sharp(l, v->m_plus(), v->m_minus()));
            rec.check(is_finite_dimensional(hw), [&] { return l.str() + " sharp is not dominant"; });
            const Typicality t = typicality(hw);
            const std::uint64_t k = count_hook_tableaux(l, v->m_plus(), v->m_minus());
            const std::uint64_t kd = kac_dimension(hw);
            rec.check(t.typical ? k == kd : k < kd, [&] {
                return l.str() + (t.typical ? " typical" : " atypical") + ": k=" + std::to_string(k) + " kac=" + std::to_string(kd);
            });
        }
    return rec.done();
}

SuiteResult chi_suite(std::uint64_t seed, int samples) {
    SpacePtr v = make_space(CommutativeFactor(GradingGroup{0, 1}, {{1}}, {{0}}),
                            {{Degree(GradingGroup{0, 1}, {0}), 1}, {Degree(GradingGroup{0, 1}, {1}), 1}});
    Recorder rec("chi_gl11", v.get());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-12, 12), den(1, 6);
    for (int s = 0; s < samples; ++s) {
        Rational x(num(rng), den(rng)), y(num(rng), den(rng));
        x.canonicalize();
        y.canonicalize();
        const Typicality t = typicality(HighestWeight(v, Weight({x, y})));
        rec.check(t.chi == x + y && t.typical == (x + y != 0), [&] { return "chi at (" + x.get_str() + "," + y.get_str() + ")"; });
    }
    return rec.done();
}

SuiteResult casimir_suite(SpacePtr v, int r_max) {
    Recorder rec("casimir", v.get());
    for (int r = 0; r <= r_max; ++r)
        for (const auto& l : partitions_of(r)) {
            if (!in_hook(l, v->m_plus(), v->m_minus())) continue;
            const CasimirCheck c = casimir_check(v, l);
            rec.check(c.defect == 0, [&] { return l.str() + ": defect " + std::to_string(c.defect); });
        }
    return rec.done();
}

std::vector<Weight> unitarity_grid(const GradedSpace& v, std::size_t min_weights) {
    const std::vector<Rational> base{-2, Rational(-3, 2), -1, Rational(-1, 2), Rational(-1, 3), 0,
                                     Rational(1, 3), Rational(1, 2), 1, Rational(3, 2), 2};
    const int dim = v.dim();
    const int mp = v.m_plus();
    std::vector<int> steps;  // slots whose gap to the next coordinate is free
    for (int a = 0; a + 1 < dim; ++a)
        if (v.is_even(a) == v.is_even(a + 1)) steps.push_back(a);
    const int gap_max = dim <= 3 ? 2 : 1;
    std::vector<Weight> out;
    std::vector<int> gaps(steps.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i < steps.size()) {
            for (int g = 0; g <= gap_max; ++g) {
                gaps[i] = g;
                rec(i + 1);
            }
            return;
        }
        for (const auto& x : base)
            for (const auto& y : base) {
                if (mp == dim && !(y == base.front())) continue;
                if (mp == 0 && !(x == base.front())) continue;
                Weight w(static_cast<std::size_t>(dim));
                for (int a = dim - 1; a >= 0; --a) {
                    const bool last_even = a == mp - 1, last_odd = a == dim - 1 && a >= mp;
                    if (last_even) w[static_cast<std::size_t>(a)] = x;
                    else if (last_odd) w[static_cast<std::size_t>(a)] = y;
                    else {
                        const auto it = std::find(steps.begin(), steps.end(), a);
                        w[static_cast<std::size_t>(a)] = w[static_cast<std::size_t>(a + 1)] + gaps[static_cast<std::size_t>(it - steps.begin())];
                    }
                }
                out.push_back(w);
            }
    };
    rec(0);
    if (out.size() > 4 * min_weights) {
        std::vector<Weight> thin;
        const std::size_t stride = out.size() / (4 * min_weights) + 1;
        for (std::size_t i = 0; i < out.size(); i += stride) thin.push_back(out[i]);
        out = std::move(thin);
    }
    return out;
}

SuiteResult unitarity_suite(SpacePtr v, int r_max, std::size_t min_weights) {
    Recorder rec("unitarity", v.get());
    const int mp = v->m_plus(), mm = v->m_minus();
    const Weight e = [&] {
        Weight w(static_cast<std::size_t>(v->dim()));
        for (int a = 0; a < v->dim(); ++a) w[static_cast<std::size_t>(a)] = v->is_even(a) ? 1 : -1;
        return w;
    }();
    Weight e_plus(static_cast<std::size_t>(v->dim()));
    for (int a = 0; a < mp; ++a) e_plus[static_cast<std::size_t>(a)] = 1;

    const auto grid = unitarity_grid(*v, min_weights);
    rec.check(grid.size() >= min_weights, [&] { return "grid has only " + std::to_string(grid.size()) + " weights"; });
    for (const auto& l : grid) {
        HighestWeight hw(v, l);
        const UnitarityVerdict c = classify_unitarisable(hw, StarType::I);
        const GramReport g = gram_report(hw, mp * mm);
        rec.check(g.unitarisable() == c.unitarisable,
                  [&] { return l.str() + ": Gram " + to_string(g.verdict) + " vs classification " + (c.unitarisable ? "yes" : "no"); });
        rec.check(typicality(hw).typical == (g.radical_dim == 0), [&] { return l.str() + ": radical against typicality"; });
        if (c.unitarisable && mp * mm > 0) {
            const GramReport g1 = gram_report(hw, 1);
            rec.check(g1.unitarisable(), [&] { return l.str() + ": level 1 indefinite for a unitarisable weight"; });
        }
        if (c.certificate) {
            const auto& z = *c.certificate;
            Weight back = z.a * e + lambda_sharp(z.mu, mp, mm) - z.b * e_plus;
            rec.check(back == l, [&] { return l.str() + ": certificate " + z.str() + " rebuilds " + back.str(); });
        }
        for (const Rational& a : {Rational(1, 2), Rational(-3)}) {
            const bool shifted = classify_unitarisable(HighestWeight(v, l + a * e), StarType::I).unitarisable;
            rec.check(shifted == c.unitarisable, [&] { return l.str() + ": verdict changes under shift by " + a.get_str() + " Eps"; });
        }
    }
    for (int r = 0; r <= r_max; ++r)
        for (const auto& p : partitions_of(r)) {
            if (!in_hook(p, mp, mm)) continue;
            HighestWeight hw(v, lambda_sharp(p, mp, mm));
            rec.check(classify_unitarisable(hw, StarType::I).unitarisable, [&] { return p.str() + " sharp not unitarisable"; });
        }
    return rec.done();
}

SuiteResult dual_pair_suite(SpacePtr v, int copies_max) {
    Recorder rec("dual_pair", v.get());
    for (int n = 1; n <= copies_max; ++n) {
        WeylAlgebra w(v, n);
        const DualPairReport d = check_dual_pair(w);
        rec.check(d.gl_n_failed == 0 && d.gl_n_checked > 0, [&] { return "gl_N relations, N=" + std::to_string(n); });
        rec.check(d.gl_v_failed == 0 && d.gl_v_checked > 0, [&] { return "gl(V) relations, N=" + std::to_string(n); });
        rec.check(d.commutant_failed == 0 && d.commutant_checked > 0, [&] { return "[E, e] = 0, N=" + std::to_string(n); });
        const Level2Report l2 = check_level2_invariants(w);
        rec.check(l2.ok(), [&] {
            return "level-2 invariants N=" + std::to_string(n) + ": dim " + std::to_string(l2.invariant_dim) + " expected " +
                   std::to_string(l2.expected_dim);
        });
    }
    return rec.done();
}

std::vector<SuiteResult> verify_space(SpacePtr v, VerifyLevel level, std::uint64_t seed) {
    const bool full = level == VerifyLevel::full;
    const int dim = v->dim();
    std::vector<SuiteResult> out;
    out.push_back(axioms_suite(v, full ? (dim <= 4 ? 5 : 3) : 3));
    out.push_back(sampling_suite(v, seed, full ? 1000 : 200));
    out.push_back(schur_weyl_suite(v, full ? 4 : 3));
    out.push_back(howe_suite(v, full ? 3 : 2, full ? 5 : 3, full ? 3 : 2));
    if (dim <= 3) out.push_back(fft_suite(v, full ? 3 : 2));
    out.push_back(typicality_suite(v, full ? 4 : 3));
    out.push_back(casimir_suite(v, full ? 4 : 3));
    if (v->factor().has_unit_modulus_property()) {
        out.push_back(unitarity_suite(v, full ? 4 : 3, full ? 50 : 20));
        out.push_back(chi_suite(seed, full ? 200 : 50));
    }
    out.push_back(dual_pair_suite(v, dim <= 3 ? 2 : 1));
    return out;
}

}  // namespace cgl
