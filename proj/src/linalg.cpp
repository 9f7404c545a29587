#include "cgl/linalg.hpp"

#include <exception>
#include <utility>

#include "cgl/error.hpp"
#include "cgl/parallel.hpp"

namespace cgl {

void EchelonBasis::reduce(SparseRow& row) const {
    std::vector<int> hits;
    for (const auto& [col, c] : row)
        if (rows_.count(col)) hits.push_back(col);
    for (int p : hits) {
        auto it = row.find(p);
        if (it == row.end()) continue;
        Scalar f = it->second;
        for (const auto& [col, c] : rows_.at(p)) {
            auto [jt, inserted] = row.try_emplace(col, -(f * c));
            if (!inserted) {
                jt->second -= f * c;
                if (jt->second.is_zero()) row.erase(jt);
            }
        }
    }
}

bool EchelonBasis::insert(SparseRow row) {
    for (auto it = row.begin(); it != row.end();) {
        if (it->first < 0 || it->first >= ncols_) throw ShapeError("row entry outside matrix width");
        it = it->second.is_zero() ? row.erase(it) : std::next(it);
    }
    reduce(row);
    if (row.empty()) return false;
    const int p = row.begin()->first;
    Scalar inv = row.begin()->second.inverse();
    for (auto& [col, c] : row) c *= inv;
    for (auto& [q, other] : rows_) {
        auto it = other.find(p);
        if (it == other.end()) continue;
        Scalar f = it->second;
        for (const auto& [col, c] : row) {
            auto [jt, inserted] = other.try_emplace(col, -(f * c));
            if (!inserted) {
                jt->second -= f * c;
                if (jt->second.is_zero()) other.erase(jt);
            }
        }
    }
    rows_.emplace(p, std::move(row));
    return true;
}

bool EchelonBasis::contains(SparseRow row) const {
    for (auto it = row.begin(); it != row.end();) it = it->second.is_zero() ? row.erase(it) : std::next(it);
    reduce(row);
    return row.empty();
}

std::vector<SparseRow> EchelonBasis::kernel() const {
    std::vector<SparseRow> out;
    for (int f = 0; f < ncols_; ++f) {
        if (rows_.count(f)) continue;
        SparseRow v;
        v[f] = Scalar(1);
        for (const auto& [p, r] : rows_) {
            auto it = r.find(f);
            if (it != r.end()) v[p] = -it->second;
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::size_t rank_field(const std::vector<SparseRow>& rows, int ncols) {
    EchelonBasis b(ncols);
    for (const auto& r : rows) b.insert(r);
    return b.rank();
}

std::vector<SparseRow> nullspace_field(const std::vector<SparseRow>& rows, int ncols) {
    EchelonBasis b(ncols);
    for (const auto& r : rows) b.insert(r);
    return b.kernel();
}

DenseMatrix to_dense(const std::vector<SparseRow>& rows, int ncols) {
    DenseMatrix m(rows.size(), std::vector<Scalar>(static_cast<std::size_t>(ncols)));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [col, c] : rows[i]) m[i][static_cast<std::size_t>(col)] = c;
    return m;
}

namespace {

using LaurentMatrix = std::vector<std::vector<Laurent>>;

// Scales each row by a common denominator so every entry is a Laurent
// polynomial.
LaurentMatrix clear_denominators(const DenseMatrix& m) {
    LaurentMatrix out;
    out.reserve(m.size());
    for (const auto& row : m) {
        Scalar l(1);
        for (const auto& x : row) {
            Scalar y = x * l;
            if (!y.is_laurent()) l *= Scalar::from_laurent(y.den());
        }
        std::vector<Laurent> r;
        r.reserve(row.size());
        for (const auto& x : row) r.push_back((x * l).num());
        out.push_back(std::move(r));
    }
    return out;
}

template <bool Parallel>
std::size_t bareiss(const DenseMatrix& dm) {
    LaurentMatrix m = clear_denominators(dm);
    const std::size_t nrows = m.size();
    const std::size_t ncols = nrows ? m[0].size() : 0;
    Laurent prev(Rational(1));
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t piv = r;
        while (piv < nrows && m[piv][c].is_zero()) ++piv;
        if (piv == nrows) continue;
        std::swap(m[piv], m[r]);
        const Laurent& pr = m[r][c];
        auto update = [&](std::size_t i) {
            const Laurent f = m[i][c];
            for (std::size_t j = c + 1; j < ncols; ++j) {
                Laurent t = pr * m[i][j];
                if (!f.is_zero()) t -= f * m[r][j];
                m[i][j] = divide_exact(t, prev);
            }
            m[i][c] = Laurent();
        };
        const auto lo = static_cast<std::ptrdiff_t>(r + 1);
        const auto hi = static_cast<std::ptrdiff_t>(nrows);
        if constexpr (Parallel) {
            std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
            for (std::ptrdiff_t i = lo; i < hi; ++i) {
                try {
                    update(static_cast<std::size_t>(i));
                } catch (...) {
#pragma omp critical(cgl_bareiss_failure)
                    failure = std::current_exception();
                }
            }
            if (failure) std::rethrow_exception(failure);
        } else {
            for (std::ptrdiff_t i = lo; i < hi; ++i) update(static_cast<std::size_t>(i));
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

}  // namespace

std::size_t rank_bareiss(const DenseMatrix& m) { return bareiss<false>(m); }
std::size_t rank_bareiss_parallel(const DenseMatrix& m) { return bareiss<true>(m); }

Inertia inertia(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw ShapeError("inertia needs a square matrix");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (a[i][j] != a[j][i]) throw PreconditionError("inertia needs a symmetric matrix");
    Inertia res;
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t k = n;
        for (std::size_t i = 0; i < n && k == n; ++i)
            if (!done[i] && a[i][i] != 0) k = i;
        if (k == n) {
            // No usable diagonal entry: add row/column j to i where a_ij != 0,
            // making a_ii = 2 a_ij.
            std::size_t pi = n, pj = n;
            for (std::size_t i = 0; i < n && pi == n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (!done[i] && !done[j] && i != j && a[i][j] != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n) break;
            for (std::size_t t = 0; t < n; ++t) a[pi][t] += a[pj][t];
            for (std::size_t t = 0; t < n; ++t) a[t][pi] += a[t][pj];
            k = pi;
        }
        const Rational d = a[k][k];
        (d > 0 ? res.positive : res.negative)++;
        done[k] = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || a[i][k] == 0) continue;
            Rational f = a[i][k] / d;
            for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[k][j];
        }
        for (std::size_t j = 0; j < n; ++j)
            if (!done[j]) a[k][j] = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i]) a[i][k] = 0;
    }
    res.zero = static_cast<int>(n) - res.positive - res.negative;
    return res;
}

}  // namespace cgl
