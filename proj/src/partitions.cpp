#include "cgl/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "cgl/error.hpp"

namespace cgl {

Partition::Partition(std::vector<int> parts) : p_(std::move(parts)) {
    while (!p_.empty() && p_.back() == 0) p_.pop_back();
    for (std::size_t i = 0; i < p_.size(); ++i) {
        if (p_[i] <= 0) throw DomainError("partition parts must be positive");
        if (i > 0 && p_[i] > p_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    int s = 0;
    for (int x : p_) s += x;
    return s;
}

Partition Partition::transpose() const {
    std::vector<int> t;
    if (p_.empty()) return Partition();
    for (int j = 1; j <= p_.front(); ++j) {
        int c = 0;
        for (int x : p_)
            if (x >= j) ++c;
        t.push_back(c);
    }
    return Partition(std::move(t));
}

std::string Partition::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < p_.size(); ++i) os << (i ? "," : "") << p_[i];
    os << ')';
    return os.str();
}

bool in_hook(const Partition& l, int m_plus, int m_minus) { return l.part(m_plus + 1) <= m_minus; }

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

Weight lambda_sharp(const Partition& l, int m_plus, int m_minus) {
    if (!in_hook(l, m_plus, m_minus))
        throw DomainError("partition " + l.str() + " is not in P_{" + std::to_string(m_plus) + "|" + std::to_string(m_minus) + "}");
    Partition t = l.transpose();
    Weight w(static_cast<std::size_t>(m_plus + m_minus));
    for (int i = 1; i <= m_plus; ++i) w[static_cast<std::size_t>(i - 1)] = l.part(i);
    for (int j = 1; j <= m_minus; ++j) w[static_cast<std::size_t>(m_plus + j - 1)] = std::max(t.part(j) - m_plus, 0);
    return w;
}

std::optional<Partition> sharp_preimage(const Weight& w, int m_plus, int m_minus) {
    if (w.size() != static_cast<std::size_t>(m_plus + m_minus)) throw ShapeError("weight length does not match M+ + M-");
    std::vector<int> even, odd;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].get_den() != 1 || w[i] < 0 || w[i] > 1 << 20) return std::nullopt;
        (static_cast<int>(i) < m_plus ? even : odd).push_back(static_cast<int>(w[i].get_num().get_si()));
    }
    if (!std::is_sorted(even.rbegin(), even.rend()) || !std::is_sorted(odd.rbegin(), odd.rend())) return std::nullopt;
    std::vector<int> oddparts(odd);
    while (!oddparts.empty() && oddparts.back() == 0) oddparts.pop_back();
    std::vector<int> rows = even;
    Partition below = Partition(oddparts).transpose();
    rows.insert(rows.end(), below.parts().begin(), below.parts().end());
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i] > rows[i - 1] || rows[i] == 0) return std::nullopt;
    Partition p(rows);
    if (!in_hook(p, m_plus, m_minus) || !(lambda_sharp(p, m_plus, m_minus) == w)) return std::nullopt;
    return p;
}

namespace {

struct Cell {
    int row, col;
};

std::vector<Cell> cells_of(const Partition& l) {
    std::vector<Cell> cells;
    for (int i = 0; i < l.length(); ++i)
        for (int j = 0; j < l.parts()[static_cast<std::size_t>(i)]; ++j) cells.push_back({i, j});
    return cells;
}

// Letters 0..M+-1 are unprimed, M+..M+M- -1 primed.
bool admissible(int x, int left, int up, int m_plus) {
    const bool primed = x >= m_plus;
    if (left >= 0 && (x < left || (primed && x == left))) return false;
    if (up >= 0 && (x < up || (!primed && x == up))) return false;
    return true;
}

std::uint64_t enumerate_tableaux(const Partition& l, int m_plus, int m_minus) {
    const int letters = m_plus + m_minus;
    if (l.empty()) return 1;
    if (letters == 0) return 0;
    auto cells = cells_of(l);
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(l.length()));
    for (int i = 0; i < l.length(); ++i) grid[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(l.part(i + 1)), -1);
    std::uint64_t count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
            ++count;
            return;
        }
        auto [i, j] = cells[k];
        int left = j > 0 ? grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] : -1;
        int up = i > 0 ? grid[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] : -1;
        int start = std::max({0, left, up});
        for (int x = start; x < letters; ++x) {
            // An unprimed letter in row i needs i strictly smaller letters above it.
            if (x < m_plus && x < i) continue;
            if (!admissible(x, left, up, m_plus)) continue;
            grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = x;
            rec(k + 1);
        }
        grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -1;
    };
    rec(0);
    return count;
}

}  // namespace

std::uint64_t count_hook_tableaux(const Partition& l, int m_plus, int m_minus) {
    if (!in_hook(l, m_plus, m_minus)) return 0;
    using Key = std::tuple<std::vector<int>, int, int>;
    static std::mutex mu;
    static std::map<Key, std::uint64_t> memo;
    Key key{l.parts(), m_plus, m_minus};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    std::uint64_t v = enumerate_tableaux(l, m_plus, m_minus);
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(std::move(key), v);
    return v;
}

std::uint64_t count_hook_tableaux_reference(const Partition& l, int m_plus, int m_minus) {
    const int letters = m_plus + m_minus;
    auto cells = cells_of(l);
    if (cells.empty()) return 1;
    if (letters == 0) return 0;
    std::vector<int> fill(cells.size(), 0);
    std::uint64_t count = 0;
    for (;;) {
        std::map<std::pair<int, int>, int> at;
        for (std::size_t k = 0; k < cells.size(); ++k) at[{cells[k].row, cells[k].col}] = fill[k];
        bool ok = true;
        for (std::size_t k = 0; k < cells.size() && ok; ++k) {
            auto [i, j] = cells[k];
            int left = j > 0 ? at[{i, j - 1}] : -1;
            int up = i > 0 ? at[{i - 1, j}] : -1;
            ok = admissible(fill[k], left, up, m_plus);
        }
        if (ok) ++count;
        std::size_t k = 0;
        while (k < fill.size() && ++fill[k] == letters) fill[k++] = 0;
        if (k == fill.size()) break;
    }
    return count;
}

namespace {

int hook_length(const Partition& l, const Partition& t, int i, int j) {
    return l.part(i) - j + t.part(j) - i + 1;
}

}  // namespace

std::uint64_t count_standard_tableaux(const Partition& l) {
    Partition t = l.transpose();
    mpz_class num = 1, den = 1;
    for (int k = 2; k <= l.size(); ++k) num *= k;
    for (int i = 1; i <= l.length(); ++i)
        for (int j = 1; j <= l.part(i); ++j) den *= hook_length(l, t, i, j);
    mpz_class r = num / den;
    return r.get_ui();
}

std::uint64_t dim_glN(const Partition& l, int n) {
    if (l.length() > n) return 0;
    Partition t = l.transpose();
    mpz_class num = 1, den = 1;
    for (int i = 1; i <= l.length(); ++i) {
        for (int j = 1; j <= l.part(i); ++j) {
            num *= n + j - i;
            den *= hook_length(l, t, i, j);
        }
    }
    mpz_class r = num / den;
    return r.get_ui();
}

std::vector<Partition> hook_partitions(int m_plus, int m_minus, int n, int d) {
    std::vector<Partition> out;
    for (auto& p : partitions_of(d))
        if (in_hook(p, m_plus, m_minus) && p.length() <= n) out.push_back(p);
    return out;
}

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    if (n < k) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    if (!r.fits_ulong_p()) throw ResourceError("binomial coefficient exceeds 64 bits");
    return r.get_ui();
}

}  // namespace cgl
