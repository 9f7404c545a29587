#include "cgl/howe.hpp"

#include <algorithm>
#include <exception>
#include <tuple>

#include "cgl/error.hpp"
#include "cgl/linalg.hpp"
#include "cgl/parallel.hpp"
#include "cgl/presets.hpp"

namespace cgl {

namespace {

template <class F>
void for_each_index(std::ptrdiff_t n, bool parallel, const F& body) {
    if (!parallel) {
        for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            body(i);
        } catch (...) {
#pragma omp critical(cgl_howe_failure)
            failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
}

std::uint64_t sym_dimension(std::int64_t even, std::int64_t odd, int d) {
    std::uint64_t s = 0;
    for (int a = 0; a <= d; ++a) s += binomial(even + a - 1, a) * binomial(odd, d - a);
    return s;
}

std::vector<HoweRow> sweep(SpacePtr space, int copies, int d_max, bool parallel, bool dual) {
    if (copies < 1) throw DomainError("number of copies must be positive");
    if (d_max < 0) throw DomainError("maximal degree must be non-negative");
    WeylAlgebra w(space, copies);
    const SymAlgebra& alg = dual ? w.dual_fock_algebra() : w.fock_algebra();
    const int mp = space->m_plus(), mm = space->m_minus();
    std::vector<HoweRow> rows(static_cast<std::size_t>(d_max + 1));
    for_each_index(d_max + 1, parallel, [&](std::ptrdiff_t i) {
        HoweRow& row = rows[static_cast<std::size_t>(i)];
        const int d = static_cast<int>(i);
        row.degree = d;
        row.formula = sym_dimension(static_cast<std::int64_t>(mp) * copies, static_cast<std::int64_t>(mm) * copies, d);
        row.enumerated = alg.monomials(d).size();
        row.lambdas = hook_partitions(mp, mm, copies, d);
        for (const auto& l : row.lambdas) row.decomposition += count_hook_tableaux(l, mp, mm) * dim_glN(l, copies);
    });
    return rows;
}

}  // namespace

std::vector<HoweRow> howe_dimension_sweep(SpacePtr space, int copies, int d_max, bool parallel) {
    return sweep(std::move(space), copies, d_max, parallel, false);
}

std::vector<HoweRow> howe_dual_sweep(SpacePtr space, int copies, int d_max, bool parallel) {
    return sweep(std::move(space), copies, d_max, parallel, true);
}

std::vector<HoweWeightCheck> howe_highest_weights(SpacePtr space, int copies, int d) {
    WeylAlgebra w(space, copies);
    const SymAlgebra& alg = w.fock_algebra();
    const int mp = space->m_plus(), mm = space->m_minus();
    const int dim = space->dim();
    auto gens = dual_pair_generators(w);
    std::vector<WeylAlgebra::Element> raising;
    for (int a = 0; a < dim; ++a)
        for (int b = a + 1; b < dim; ++b) raising.push_back(gens.e_gl_v[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
    for (int r = 0; r < copies; ++r)
        for (int s = r + 1; s < copies; ++s) raising.push_back(gens.e_gl_n[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)]);
    auto monos = alg.monomials(d);
    std::vector<HoweWeightCheck> out;
    for (const auto& l : hook_partitions(mp, mm, copies, d)) {
        HoweWeightCheck hc;
        hc.lambda = l;
        Weight sharp = lambda_sharp(l, mp, mm);
        std::vector<Monomial> cols;
        for (const auto& m : monos) {
            bool match = true;
            for (int a = 0; a < dim && match; ++a) {
                int cnt = 0;
                for (int r = 0; r < copies; ++r) cnt += m[static_cast<std::size_t>(w.x_id(a, r))];
                match = Rational(cnt) == sharp[static_cast<std::size_t>(a)];
            }
            for (int r = 0; r < copies && match; ++r) {
                int cnt = 0;
                for (int a = 0; a < dim; ++a) cnt += m[static_cast<std::size_t>(w.x_id(a, r))];
                match = cnt == l.part(r + 1);
            }
            if (match) cols.push_back(m);
        }
        hc.weight_space_dim = cols.size();
        std::map<std::pair<std::size_t, Monomial>, SparseRow> rows;
        for (std::size_t k = 0; k < cols.size(); ++k) {
            FockVector f{{cols[k], Scalar(1)}};
            for (std::size_t op = 0; op < raising.size(); ++op)
                for (const auto& [m, c] : fock_apply(w, raising[op], f)) rows[{op, m}][static_cast<int>(k)] = c;
        }
        EchelonBasis eqs(static_cast<int>(cols.size()));
        for (auto& [key, row] : rows) eqs.insert(row);
        hc.joint_highest_dim = cols.size() - eqs.rank();
        out.push_back(std::move(hc));
    }
    return out;
}

InvariantReport invariant_dimension(SpacePtr space, int copies, int copies2, int d, std::size_t max_columns) {
    if (copies < 1 || copies2 < 1) throw DomainError("numbers of copies must be positive");
    if (d < 0) throw DomainError("degree must be non-negative");
    const GradedSpace& v = *space;
    const int dim = v.dim();
    const int nx = dim * copies;
    const int nbar = dim * copies2;
    std::vector<Degree> degs;
    for (int a = 0; a < dim; ++a)
        for (int r = 0; r < copies; ++r) degs.push_back(v.degree(a));
    for (int a = 0; a < dim; ++a)
        for (int s = 0; s < copies2; ++s) degs.push_back(-v.degree(a));
    SymAlgebra alg(v.factor(), degs);
    auto x_id = [&](int a, int r) { return a * copies + r; };
    auto bar_id = [&](int a, int s) { return nx + a * copies2 + s; };

    InvariantReport rep;
    rep.copies = copies;
    rep.copies2 = copies2;
    rep.degree = d;

    // Weight-zero monomials: x and xbar parts with equal letter counts.
    auto letter_counts = [&](const Monomial& m, int begin, int per) {
        std::vector<int> c(static_cast<std::size_t>(dim), 0);
        for (int a = 0; a < dim; ++a)
            for (int r = 0; r < per; ++r) c[static_cast<std::size_t>(a)] += m[static_cast<std::size_t>(begin + a * per + r)];
        return c;
    };
    std::map<std::vector<int>, std::vector<Monomial>> bars;
    for (auto& m : alg.monomials(d, nx, nx + nbar)) bars[letter_counts(m, nx, copies2)].push_back(m);
    std::vector<Monomial> cols;
    for (const auto& mx : alg.monomials(d, 0, nx)) {
        auto it = bars.find(letter_counts(mx, 0, copies));
        if (it == bars.end()) continue;
        for (const auto& mb : it->second) {
            Monomial m = mx;
            for (int g = nx; g < nx + nbar; ++g) m[static_cast<std::size_t>(g)] = mb[static_cast<std::size_t>(g)];
            cols.push_back(std::move(m));
            if (cols.size() > max_columns)
                throw ResourceError("weight-zero subspace exceeds " + std::to_string(max_columns) + " monomials");
        }
    }
    rep.columns = cols.size();
    std::map<Monomial, int> col_index;
    for (std::size_t k = 0; k < cols.size(); ++k) col_index[cols[k]] = static_cast<int>(k);

    auto derivation = [&](int c, int dd, const SymPoly& f) {
        auto on_gen = [&](int h) {
            SymPoly img;
            if (h < nx) {
                if (h / copies == dd) img.emplace(alg.generator(x_id(c, h % copies)), Scalar(1));
            } else {
                const int a = (h - nx) / copies2;
                if (a == c) {
                    OmegaValue t = v.omega_idx(c, c) * v.omega_idx(dd, c);
                    img.emplace(alg.generator(bar_id(dd, (h - nx) % copies2)),
                                Scalar(1).times_monomial(-t.sign, static_cast<int>(t.qexp)));
                }
            }
            return img;
        };
        return alg.apply_derivation(f, v.degree(c) - v.degree(dd), on_gen);
    };

    std::vector<std::pair<int, int>> ops;
    for (int c = 0; c < dim; ++c)
        for (int dd = 0; dd < dim; ++dd)
            if (c != dd) ops.emplace_back(c, dd);

    // Images of every column under every off-diagonal E_cd.
    std::vector<std::vector<SymPoly>> images(cols.size());
    for_each_index(static_cast<std::ptrdiff_t>(cols.size()), true, [&](std::ptrdiff_t k) {
        SymPoly f{{cols[static_cast<std::size_t>(k)], Scalar(1)}};
        auto& out = images[static_cast<std::size_t>(k)];
        for (const auto& [c, dd] : ops) out.push_back(derivation(c, dd, f));
    });
    std::map<std::pair<std::size_t, Monomial>, SparseRow> rows;
    for (std::size_t k = 0; k < cols.size(); ++k)
        for (std::size_t op = 0; op < ops.size(); ++op)
            for (const auto& [m, c] : images[k][op]) rows[{op, m}][static_cast<int>(k)] = c;
    EchelonBasis eqs(static_cast<int>(cols.size()));
    for (auto& [key, row] : rows) eqs.insert(row);
    rep.kernel_dim = cols.size() - eqs.rank();

    for (const auto& l : hook_partitions(v.m_plus(), v.m_minus(), std::min(copies, copies2), d))
        rep.expected += dim_glN(l, copies) * dim_glN(l, copies2);

    // z_rs = sum_a x_{a,r} xbar_{a,s} and their degree-d products.
    std::vector<SymPoly> z;
    for (int r = 0; r < copies; ++r)
        for (int s = 0; s < copies2; ++s) {
            SymPoly p;
            for (int a = 0; a < dim; ++a)
                for (const auto& [m, c] : alg.multiply({{alg.generator(x_id(a, r)), Scalar(1)}}, {{alg.generator(bar_id(a, s)), Scalar(1)}}))
                    add_term(p, m, c);
            z.push_back(std::move(p));
        }
    std::vector<SymPoly> zmon;
    std::vector<int> pick;
    std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
        if (left == 0) {
            SymPoly p{{alg.unit(), Scalar(1)}};
            for (int i : pick) p = alg.multiply(p, z[static_cast<std::size_t>(i)]);
            zmon.push_back(std::move(p));
            return;
        }
        for (std::size_t i = from; i < z.size(); ++i) {
            pick.push_back(static_cast<int>(i));
            rec(i, left - 1);
            pick.pop_back();
        }
    };
    rec(0, d);
    rep.z_monomials = zmon.size();
    rep.z_in_kernel = true;
    std::vector<SparseRow> zrows;
    for (const auto& p : zmon) {
        SparseRow row;
        for (const auto& [m, c] : p) {
            auto it = col_index.find(m);
            if (it == col_index.end()) throw Error("z-monomial outside the weight-zero subspace");
            row[it->second] = c;
        }
        zrows.push_back(std::move(row));
        for (const auto& [c, dd] : ops)
            if (!derivation(c, dd, p).empty()) rep.z_in_kernel = false;
    }
    rep.z_rank_field = rank_field(zrows, static_cast<int>(cols.size()));
    rep.z_rank_bareiss = rank_bareiss_parallel(to_dense(zrows, static_cast<int>(cols.size())));
    return rep;
}

std::vector<GlvvRow> glvv_decomposition(SpacePtr v, SpacePtr v2, int d_max) {
    std::int64_t even = 0, odd = 0;
    for (int a = 0; a < v->dim(); ++a)
        for (int b = 0; b < v2->dim(); ++b) (v->parity(a) * v2->parity(b) > 0 ? even : odd)++;
    std::vector<GlvvRow> rows;
    for (int d = 0; d <= d_max; ++d) {
        GlvvRow row;
        row.degree = d;
        row.dimension = sym_dimension(even, odd, d);
        for (const auto& l : partitions_of(d)) {
            if (!in_hook(l, v->m_plus(), v->m_minus()) || !in_hook(l, v2->m_plus(), v2->m_minus())) continue;
            row.lambdas.push_back(l);
            row.sharp_v.push_back(lambda_sharp(l, v->m_plus(), v->m_minus()));
            row.sharp_v2.push_back(lambda_sharp(l, v2->m_plus(), v2->m_minus()));
            row.decomposition += count_hook_tableaux(l, v->m_plus(), v->m_minus()) * count_hook_tableaux(l, v2->m_plus(), v2->m_minus());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

bool GlqReport::ok() const {
    if (relations_failed || !factor_ok) return false;
    for (const auto& r : sweep)
        if (!r.ok()) return false;
    return true;
}

GlqReport glq_relations_check(int m, int n, int copies, int d_max) {
    GlqReport rep;
    rep.m = m;
    rep.n = n;
    rep.copies = copies;
    SpacePtr sp = make_glq(m, n);
    const int k = m + n;
    auto par = [&](int i) { return i >= m ? 1 : 0; };
    const Scalar q = Scalar::q_power(1);
    rep.factor_ok = true;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            Scalar expect = (par(i) && par(j) ? Scalar(-1) : Scalar(1)) * q;
            if (sp->factor().omega_eval(sp->degree(i), sp->degree(j)) != expect) rep.factor_ok = false;
        }
    WeylAlgebra w(sp, copies);
    auto x = [&](int i, int r) { return w.gen(w.x_id(i, r)); };
    auto d = [&](int i, int r) { return w.gen(w.d_id(i, r)); };
    auto check = [&](const WeylAlgebra::Element& lhs, const WeylAlgebra::Element& rhs) {
        ++rep.relations_checked;
        if (lhs != rhs) ++rep.relations_failed;
    };
    auto sgn = [](int e) { return e % 2 ? Scalar(-1) : Scalar(1); };
    for (int r = 0; r < copies; ++r)
        for (int s = 0; s < copies; ++s)
            for (int i = 0; i < k; ++i) {
                check(w.multiply(x(i, r), x(i, s)), scale(w.multiply(x(i, s), x(i, r)), sgn(par(i))));
                check(w.multiply(d(i, r), d(i, s)), scale(w.multiply(d(i, s), d(i, r)), sgn(par(i))));
                WeylAlgebra::Element ccr = w.multiply(d(i, r), x(i, s)) - scale(w.multiply(x(i, s), d(i, r)), sgn(par(i)));
                check(ccr, r == s ? w.one() : WeylAlgebra::Element{});
                for (int j = i + 1; j < k; ++j) {
                    Scalar t = sgn(par(i) * par(j));
                    check(w.multiply(x(i, r), x(j, s)), scale(w.multiply(x(j, s), x(i, r)), t * q));
                    check(w.multiply(d(i, r), d(j, s)), scale(w.multiply(d(j, s), d(i, r)), t * q));
                    check(w.multiply(d(i, r), x(j, s)) - scale(w.multiply(x(j, s), d(i, r)), t * q.inverse()), {});
                }
            }
    rep.sweep = howe_dimension_sweep(sp, copies, d_max);
    return rep;
}

}  // namespace cgl
