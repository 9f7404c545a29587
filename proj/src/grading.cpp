#include "cgl/grading.hpp"

#include <sstream>

#include "cgl/error.hpp"

namespace cgl {

Degree::Degree(const GradingGroup& g, std::vector<std::int64_t> coords) : g_(g), x_(std::move(coords)) {
    if (static_cast<int>(x_.size()) != g_.rank())
        throw ShapeError("degree has " + std::to_string(x_.size()) + " coordinates, group rank is " +
                         std::to_string(g_.rank()));
    reduce();
}

Degree Degree::zero(const GradingGroup& g) {
    return Degree(g, std::vector<std::int64_t>(static_cast<std::size_t>(g.rank()), 0));
}

void Degree::reduce() {
    for (std::size_t i = static_cast<std::size_t>(g_.free_rank); i < x_.size(); ++i) {
        x_[i] %= 2;
        if (x_[i] < 0) x_[i] += 2;
    }
}

bool Degree::is_zero() const {
    for (auto v : x_)
        if (v != 0) return false;
    return true;
}

Degree Degree::operator-() const {
    Degree r = *this;
    for (auto& v : r.x_) v = -v;
    r.reduce();
    return r;
}

Degree& Degree::operator+=(const Degree& o) {
    if (!(g_ == o.g_)) throw ShapeError("adding degrees of different grading groups");
    for (std::size_t i = 0; i < x_.size(); ++i) x_[i] += o.x_[i];
    reduce();
    return *this;
}

Degree& Degree::operator-=(const Degree& o) { return *this += -o; }

std::string Degree::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < x_.size(); ++i) os << (i ? "," : "") << x_[i];
    os << ')';
    return os.str();
}

Scalar OmegaValue::scalar() const {
    return Scalar::q_power(static_cast<int>(qexp)).times_monomial(sign, 0);
}

CommutativeFactor::CommutativeFactor(GradingGroup g, std::vector<std::vector<std::int64_t>> sign_form,
                                     std::vector<std::vector<std::int64_t>> exp_form)
    : g_(g), s_(std::move(sign_form)), b_(std::move(exp_form)) {
    const auto n = static_cast<std::size_t>(g_.rank());
    auto check_square = [n](const std::vector<std::vector<std::int64_t>>& m, const char* name) {
        if (m.size() != n) throw ShapeError(std::string(name) + " must be " + std::to_string(n) + "x" + std::to_string(n));
        for (const auto& row : m)
            if (row.size() != n) throw ShapeError(std::string(name) + " must be " + std::to_string(n) + "x" + std::to_string(n));
    };
    check_square(s_, "sign_form");
    check_square(b_, "exp_form");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if ((s_[i][j] - s_[j][i]) % 2 != 0) throw DomainError("sign_form must be symmetric mod 2");
            if (b_[i][j] != -b_[j][i]) throw DomainError("exp_form must be skew-symmetric");
            bool torsion = i >= static_cast<std::size_t>(g_.free_rank) || j >= static_cast<std::size_t>(g_.free_rank);
            if (torsion && b_[i][j] != 0) throw DomainError("exp_form must vanish on torsion coordinates");
        }
    }
}

void CommutativeFactor::check_degree(const Degree& a) const {
    if (!(a.group() == g_)) throw ShapeError("degree " + a.str() + " is not in the factor's grading group");
}

OmegaValue CommutativeFactor::value(const Degree& a, const Degree& b) const {
    check_degree(a);
    check_degree(b);
    const auto n = a.coords().size();
    std::int64_t se = 0;
    std::int64_t qe = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            se += (s_[i][j] % 2) * (a[i] % 2) * (b[j] % 2) % 2;
            qe += b_[i][j] * a[i] * b[j];
        }
    }
    return {se % 2 == 0 ? 1 : -1, qe};
}

int CommutativeFactor::omega_parity(const Degree& a) const { return value(a, a).sign; }

bool CommutativeFactor::has_unit_modulus_property() const {
    for (const auto& row : b_)
        for (auto v : row)
            if (v != 0) return false;
    return true;
}

}  // namespace cgl
