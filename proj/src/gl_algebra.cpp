#include "cgl/gl_algebra.hpp"

#include <algorithm>
#include <sstream>

#include "cgl/error.hpp"

namespace cgl {

GlElement::GlElement(SpacePtr space) : space_(std::move(space)) {
    if (!space_) throw PreconditionError("GlElement needs a space");
}

GlElement GlElement::unit(SpacePtr space, int a, int b, const Scalar& c) {
    GlElement x(std::move(space));
    x.add(a, b, c);
    return x;
}

void GlElement::check_index(int a, int b) const {
    const int n = space_->dim();
    if (a < 0 || b < 0 || a >= n || b >= n)
        throw ShapeError("matrix unit (" + std::to_string(a) + "," + std::to_string(b) + ") outside dim " + std::to_string(n));
}

Scalar GlElement::coeff(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Scalar() : it->second;
}

void GlElement::add(int a, int b, const Scalar& c) {
    check_index(a, b);
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({a, b}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::optional<Degree> GlElement::homogeneous_degree() const {
    if (terms_.empty()) return Degree::zero(space_->group());
    std::optional<Degree> d;
    for (const auto& [k, c] : terms_) {
        Degree dk = space_->unit_degree(k.first, k.second);
        if (!d) d = dk;
        else if (!(*d == dk)) return std::nullopt;
    }
    return d;
}

std::vector<GlElement> GlElement::homogeneous_parts() const {
    std::map<std::vector<std::int64_t>, GlElement> parts;
    for (const auto& [k, c] : terms_) {
        auto key = space_->unit_degree(k.first, k.second).coords();
        auto it = parts.try_emplace(key, GlElement(space_)).first;
        it->second.add(k.first, k.second, c);
    }
    std::vector<GlElement> out;
    for (auto& [k, x] : parts) out.push_back(std::move(x));
    return out;
}

GlElement& GlElement::operator+=(const GlElement& o) {
    require_same_space(*this, o);
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
}

GlElement& GlElement::operator-=(const GlElement& o) {
    require_same_space(*this, o);
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
    return *this;
}

GlElement& GlElement::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
}

std::string GlElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << '(' << c.str() << ")E[" << space_->label(k.first) << ',' << space_->label(k.second) << ']';
    }
    return os.str();
}

void require_same_space(const GlElement& x, const GlElement& y) {
    if (x.space() != y.space() && !(*x.space() == *y.space()))
        throw PreconditionError("gl elements belong to different spaces");
}

OmegaValue omega_units(const GradedSpace& v, int a, int b, int c, int d) {
    return v.omega_idx(a, c) * v.omega_idx(a, d).inverse() * v.omega_idx(b, c).inverse() * v.omega_idx(b, d);
}

GlElement bracket(const GlElement& x, const GlElement& y) {
    require_same_space(x, y);
    const GradedSpace& v = *x.space();
    GlElement r(x.space());
    for (const auto& [k1, c1] : x.terms()) {
        const auto [a, b] = k1;
        for (const auto& [k2, c2] : y.terms()) {
            const auto [c, d] = k2;
            if (b == c) r.add(a, d, c1 * c2);
            if (d == a) {
                OmegaValue w = omega_units(v, a, b, c, d);
                r.add(c, b, (c1 * c2).times_monomial(-w.sign, static_cast<int>(w.qexp)));
            }
        }
    }
    return r;
}

GlElement matrix_product(const GlElement& x, const GlElement& y) {
    require_same_space(x, y);
    GlElement r(x.space());
    for (const auto& [k1, c1] : x.terms())
        for (const auto& [k2, c2] : y.terms())
            if (k1.second == k2.first) r.add(k1.first, k2.second, c1 * c2);
    return r;
}

namespace {

Degree require_homogeneous(const GlElement& x, const char* what) {
    auto d = x.homogeneous_degree();
    if (!d) throw PreconditionError(std::string(what) + " requires a homogeneous argument");
    return *d;
}

}  // namespace

GlElement bracket_via_products(const GlElement& x, const GlElement& y) {
    Degree dx = require_homogeneous(x, "bracket_via_products");
    Degree dy = require_homogeneous(y, "bracket_via_products");
    GlElement r = matrix_product(x, y);
    r -= x.space()->factor().omega_eval(dx, dy) * matrix_product(y, x);
    return r;
}

GlElement jacobi_defect(const GlElement& x, const GlElement& y, const GlElement& z) {
    Degree dx = require_homogeneous(x, "jacobi_defect");
    Degree dy = require_homogeneous(y, "jacobi_defect");
    GlElement r = bracket(x, bracket(y, z));
    r -= bracket(bracket(x, y), z);
    r -= x.space()->factor().omega_eval(dx, dy) * bracket(y, bracket(x, z));
    return r;
}

GlElement skew_defect(const GlElement& x, const GlElement& y) {
    Degree dx = require_homogeneous(x, "skew_defect");
    Degree dy = require_homogeneous(y, "skew_defect");
    GlElement r = bracket(x, y);
    r += x.space()->factor().omega_eval(dx, dy) * bracket(y, x);
    return r;
}

Scalar supertrace(const GlElement& x) {
    Scalar s;
    for (const auto& [k, c] : x.terms())
        if (k.first == k.second) s += x.space()->is_even(k.first) ? c : -c;
    return s;
}

Scalar bilinear_form(const GlElement& x, const GlElement& y) { return supertrace(matrix_product(x, y)); }

// ---------------------------------------------------------------- weights

Weight Weight::from_ints(const std::vector<long>& v) {
    Weight w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w.c[i] = v[i];
    return w;
}

Weight& Weight::operator+=(const Weight& o) {
    if (o.size() != size()) throw ShapeError("weight length mismatch");
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& o) {
    if (o.size() != size()) throw ShapeError("weight length mismatch");
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
}

Weight& Weight::operator*=(const Rational& s) {
    for (auto& x : c) x *= s;
    return *this;
}

std::string Weight::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i].get_str();
    os << ')';
    return os.str();
}

Weight epsilon(const GradedSpace& v, int a) {
    Weight w(static_cast<std::size_t>(v.dim()));
    w[static_cast<std::size_t>(a)] = 1;
    return w;
}

Rational weight_inner(const GradedSpace& v, const Weight& l, const Weight& m) {
    if (l.size() != static_cast<std::size_t>(v.dim()) || m.size() != l.size())
        throw ShapeError("weight length does not match dim V");
    Rational s = 0;
    for (int a = 0; a < v.dim(); ++a) {
        Rational t = l[static_cast<std::size_t>(a)] * m[static_cast<std::size_t>(a)];
        if (v.is_even(a)) s += t;
        else s -= t;
    }
    return s;
}

Weight rho(const GradedSpace& v) {
    const int mp = v.m_plus();
    const int mm = v.m_minus();
    Weight r(static_cast<std::size_t>(v.dim()));
    for (int i = 1; i <= mp; ++i) r[static_cast<std::size_t>(i - 1)] = Rational(mp - mm - 2 * i + 1, 2);
    for (int s = 1; s <= mm; ++s) r[static_cast<std::size_t>(mp + s - 1)] = Rational(mp + mm - 2 * s + 1, 2);
    for (auto& x : r.c) x.canonicalize();
    return r;
}

PositiveRoots positive_roots(const GradedSpace& v) {
    PositiveRoots pr;
    for (int a = 0; a < v.dim(); ++a) {
        for (int b = a + 1; b < v.dim(); ++b) {
            Weight w = epsilon(v, a) - epsilon(v, b);
            if (v.is_even(a) == v.is_even(b)) {
                pr.even.push_back(std::move(w));
                pr.even_pairs.emplace_back(a, b);
            } else {
                pr.odd.push_back(std::move(w));
                pr.odd_pairs.emplace_back(a, b);
            }
        }
    }
    return pr;
}

std::set<Weight> weyl_orbit(const GradedSpace& v, const Weight& l) {
    if (l.size() != static_cast<std::size_t>(v.dim())) throw ShapeError("weight length does not match dim V");
    const auto mp = static_cast<std::size_t>(v.m_plus());
    std::vector<Rational> even(l.c.begin(), l.c.begin() + static_cast<std::ptrdiff_t>(mp));
    std::vector<Rational> odd(l.c.begin() + static_cast<std::ptrdiff_t>(mp), l.c.end());
    std::sort(even.begin(), even.end());
    std::sort(odd.begin(), odd.end());
    std::set<Weight> orbit;
    do {
        std::vector<Rational> o = odd;
        do {
            Weight w(even);
            w.c.insert(w.c.end(), o.begin(), o.end());
            orbit.insert(std::move(w));
        } while (std::next_permutation(o.begin(), o.end()));
    } while (std::next_permutation(even.begin(), even.end()));
    return orbit;
}

std::uint64_t pbw_dimension_nilradical(const GradedSpace& v) {
    const int n = v.m_plus() * v.m_minus();
    if (n >= 64) throw ResourceError("2^(M+ M-) exceeds 64 bits");
    return std::uint64_t{1} << n;
}

}  // namespace cgl
