#include "cgl/reps.hpp"

#include <exception>
#include <sstream>

#include "cgl/error.hpp"
#include "cgl/parallel.hpp"
#include "cgl/tensor.hpp"

namespace cgl {

namespace {

bool is_nonneg_integer(const Rational& x) { return x.get_den() == 1 && x >= 0; }

Rational ceil_of(const Rational& x) {
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return Rational(c);
}

// Eps = Eps_+ - Eps_- and Eps_+.
Weight script_e(const GradedSpace& v) {
    Weight e(static_cast<std::size_t>(v.dim()));
    for (int a = 0; a < v.dim(); ++a) e[static_cast<std::size_t>(a)] = v.is_even(a) ? 1 : -1;
    return e;
}

Weight script_e_plus(const GradedSpace& v) {
    Weight e(static_cast<std::size_t>(v.dim()));
    for (int a = 0; a < v.m_plus(); ++a) e[static_cast<std::size_t>(a)] = 1;
    return e;
}

void require_sign_valued(const GradedSpace& v) {
    if (!v.factor().has_unit_modulus_property())
        throw UnsupportedError("unitarisability needs a sign-valued commutative factor (exp_form = 0)");
}

Partition block_partition(const Weight& block) {
    std::vector<int> parts;
    for (std::size_t i = 0; i < block.size(); ++i) {
        Rational d = block[i] - block[block.size() - 1];
        parts.push_back(static_cast<int>(d.get_num().get_si()));
    }
    return Partition(parts);
}

// lambda = a Eps + mu_sharp; the smallest admissible shift of the reference
// coordinate is tried first.
std::optional<std::pair<Rational, Partition>> tensor_decomposition(const HighestWeight& hw) {
    const GradedSpace& v = *hw.space;
    const int mp = v.m_plus(), mm = v.m_minus();
    const Weight e = script_e(v);
    const std::size_t ref = static_cast<std::size_t>(mm > 0 ? v.dim() - 1 : mp - 1);
    long bound = 0;
    if (mp > 0 && mm > 0) {
        Rational top = hw.lambda[static_cast<std::size_t>(mp - 1)] + hw.lambda[ref];
        if (top > 0) bound = ceil_of(top).get_num().get_si();
    }
    for (long k = 0; k <= bound; ++k) {
        Rational a = (hw.lambda[ref] - Rational(k)) / e[ref];
        auto mu = sharp_preimage(hw.lambda - a * e, mp, mm);
        if (mu) return std::make_pair(a, *mu);
    }
    return std::nullopt;
}

}  // namespace

HighestWeight::HighestWeight(SpacePtr s, Weight l) : space(std::move(s)), lambda(std::move(l)) {
    if (!space) throw PreconditionError("highest weight without a space");
    if (lambda.size() != static_cast<std::size_t>(space->dim()))
        throw ShapeError("weight has " + std::to_string(lambda.size()) + " coordinates, dim V is " +
                         std::to_string(space->dim()));
    for (auto& x : lambda.c) x.canonicalize();
}

bool HighestWeight::dominant() const {
    for (int a = 0; a + 1 < space->dim(); ++a) {
        if (space->is_even(a) != space->is_even(a + 1)) continue;
        if (!is_nonneg_integer(lambda[static_cast<std::size_t>(a)] - lambda[static_cast<std::size_t>(a + 1)])) return false;
    }
    return true;
}

bool HighestWeight::block_integral() const {
    for (int a = 0; a + 1 < space->dim(); ++a) {
        if (space->is_even(a) != space->is_even(a + 1)) continue;
        if (Rational(lambda[static_cast<std::size_t>(a)] - lambda[static_cast<std::size_t>(a + 1)]).get_den() != 1) return false;
    }
    return true;
}

Weight HighestWeight::plus() const {
    return Weight(std::vector<Rational>(lambda.c.begin(), lambda.c.begin() + space->m_plus()));
}

Weight HighestWeight::minus() const {
    return Weight(std::vector<Rational>(lambda.c.begin() + space->m_plus(), lambda.c.end()));
}

bool is_finite_dimensional(const HighestWeight& hw) { return hw.dominant(); }

Typicality typicality(const HighestWeight& hw) {
    const GradedSpace& v = *hw.space;
    const Weight lr = hw.lambda + rho(v);
    Typicality t;
    for (int i = 0; i < v.m_plus(); ++i)
        for (int r = v.m_plus(); r < v.dim(); ++r) t.chi *= weight_inner(v, lr, epsilon(v, i) - epsilon(v, r));
    t.typical = t.chi != 0;
    return t;
}

std::uint64_t levi_dimension(const HighestWeight& hw) {
    if (!hw.dominant()) throw DomainError("weight " + hw.lambda.str() + " is not dominant");
    std::uint64_t d = 1;
    const Weight p = hw.plus(), m = hw.minus();
    if (p.size()) d *= dim_glN(block_partition(p), static_cast<int>(p.size()));
    if (m.size()) d *= dim_glN(block_partition(m), static_cast<int>(m.size()));
    return d;
}

std::uint64_t kac_dimension(const HighestWeight& hw) {
    return pbw_dimension_nilradical(*hw.space) * levi_dimension(hw);
}

Rational casimir_eigenvalue(const HighestWeight& hw) {
    const GradedSpace& v = *hw.space;
    return weight_inner(v, hw.lambda + Rational(2) * rho(v), hw.lambda);
}

CasimirCheck casimir_check(SpacePtr space, const Partition& lambda) {
    CasimirCheck out;
    out.lambda = lambda;
    out.sharp = lambda_sharp(lambda, space->m_plus(), space->m_minus());
    out.eigenvalue = casimir_eigenvalue(HighestWeight(space, out.sharp));
    const TensorVector v = highest_weight_vector(space, lambda);
    TensorVector omega_v(space, v.power());
    for (int a = 0; a < space->dim(); ++a)
        for (int b = 0; b < space->dim(); ++b) {
            TensorVector t = gl_act_tensor(GlElement::unit(space, a, b), gl_act_tensor(GlElement::unit(space, b, a), v));
            omega_v += Scalar(space->parity(b)) * t;
        }
    omega_v -= Scalar(out.eigenvalue) * v;
    out.defect = omega_v.terms().size();
    return out;
}

std::string UnitaryCertificate::str() const {
    std::ostringstream os;
    os << "a=" << a.get_str() << " mu=" << mu.str() << " b=" << b.get_str();
    return os.str();
}

UnitarityVerdict unitarisable_by_conditions(const HighestWeight& hw) {
    const GradedSpace& v = *hw.space;
    require_sign_valued(v);
    UnitarityVerdict out;
    if (!hw.dominant()) {
        out.reason = "not dominant, so L_lambda is infinite dimensional";
        return out;
    }
    const int mp = v.m_plus(), mm = v.m_minus();
    if (mp == 0 || mm == 0) {
        out.unitarisable = true;
        out.reason = "single parity block: every finite dimensional module with real weight";
        return out;
    }
    const Weight lr = hw.lambda + rho(v);
    const std::size_t last = static_cast<std::size_t>(v.dim() - 1);
    const Weight eps_top = epsilon(v, mp - 1);
    out.boundary = weight_inner(v, lr, eps_top - epsilon(v, v.dim() - 1));
    Rational t;
    if (typicality(hw).typical) {
        out.unitarisable = out.boundary > 0;
        out.reason = out.unitarisable ? "typical and (lambda+rho, eps_M+ - eps_M-') > 0"
                                      : "typical but (lambda+rho, eps_M+ - eps_M-') <= 0";
        t = hw.lambda[last];
    } else {
        for (int r = mp; r < v.dim() && !out.unitarisable; ++r) {
            if (weight_inner(v, lr, eps_top - epsilon(v, r)) == 0 && hw.lambda[static_cast<std::size_t>(r)] == hw.lambda[last]) {
                out.unitarisable = true;
                t = hw.lambda[static_cast<std::size_t>(r)];
                out.reason = "atypical with (lambda+rho, eps_M+ - eps_r') = 0 and lambda_r' = lambda_M-' at r = " +
                             std::to_string(r - mp + 1);
            }
        }
        if (!out.unitarisable) out.reason = "atypical and no odd index r meets both vanishing conditions";
    }
    if (out.unitarisable) {
        // lambda + t Eps = ceil(.) - b Eps_+ with ceil(.) a tensor weight.
        Weight ring = hw.lambda + t * script_e(v);
        Rational b = ceil_of(ring[static_cast<std::size_t>(mp - 1)]) - ring[static_cast<std::size_t>(mp - 1)];
        auto mu = sharp_preimage(ring + b * script_e_plus(v), mp, mm);
        if (mu) out.certificate = UnitaryCertificate{-t, *mu, b};
    }
    return out;
}

UnitarityVerdict unitarisable_by_decomposition(const HighestWeight& hw) {
    const GradedSpace& v = *hw.space;
    require_sign_valued(v);
    UnitarityVerdict out;
    if (!hw.dominant()) {
        out.reason = "not dominant, so L_lambda is infinite dimensional";
        return out;
    }
    const int mp = v.m_plus(), mm = v.m_minus();
    if (auto d = tensor_decomposition(hw)) {
        out.unitarisable = true;
        out.certificate = UnitaryCertificate{d->first, d->second, Rational(0)};
        out.reason = "lambda = a Eps + mu_sharp";
        return out;
    }
    if (mp > 0 && mm > 0) {
        const Rational a = -hw.lambda[static_cast<std::size_t>(v.dim() - 1)];
        const Weight nu0 = hw.lambda - a * script_e(v);
        const Rational top = nu0[static_cast<std::size_t>(mp - 1)];
        const Rational b = ceil_of(top) - top;
        if (b > 0) {
            auto mu = sharp_preimage(nu0 + b * script_e_plus(v), mp, mm);
            if (mu && mu->part(mp) >= mm && mm > mu->part(mp + 1)) {
                out.unitarisable = true;
                out.certificate = UnitaryCertificate{a, *mu, b};
                out.reason = "lambda = a Eps + mu_sharp - b Eps_+ with mu flexible";
                return out;
            }
        }
    }
    out.reason = "no decomposition a Eps + mu_sharp (- b Eps_+)";
    return out;
}

std::optional<Weight> dual_weight(const HighestWeight& hw) {
    if (!hw.dominant()) return std::nullopt;
    const GradedSpace& v = *hw.space;
    if (auto d = tensor_decomposition(hw)) {
        Weight low = d->first * script_e(v);
        if (d->second.size() > 0) {
            TensorVector lw = lowest_weight_vector(highest_weight_vector(hw.space, d->second));
            low += *lw.weight();
        }
        return Rational(-1) * low;
    }
    if (!typicality(hw).typical) return std::nullopt;
    const int mp = v.m_plus(), mm = v.m_minus();
    Weight low(static_cast<std::size_t>(v.dim()));
    for (int i = 0; i < mp; ++i)
        low[static_cast<std::size_t>(i)] = hw.lambda[static_cast<std::size_t>(mp - 1 - i)] - mm;
    for (int r = 0; r < mm; ++r)
        low[static_cast<std::size_t>(mp + r)] = hw.lambda[static_cast<std::size_t>(v.dim() - 1 - r)] + mp;
    return Rational(-1) * low;
}

UnitarityVerdict classify_unitarisable(const HighestWeight& hw, StarType type) {
    require_sign_valued(*hw.space);
    if (type == StarType::I) {
        UnitarityVerdict c = unitarisable_by_conditions(hw);
        UnitarityVerdict d = unitarisable_by_decomposition(hw);
        if (c.unitarisable != d.unitarisable)
            throw Error("type I routes disagree on " + hw.lambda.str() + ": " + c.reason + " / " + d.reason);
        if (!c.certificate) c.certificate = d.certificate;
        return c;
    }
    if (!hw.dominant()) {
        UnitarityVerdict out;
        out.reason = "not dominant, so L_lambda is infinite dimensional";
        return out;
    }
    auto star = dual_weight(hw);
    if (!star)
        throw UnsupportedError("dual highest weight of atypical non-tensor weight " + hw.lambda.str() + " is not computed");
    UnitarityVerdict out = classify_unitarisable(HighestWeight(hw.space, *star), StarType::I);
    out.reason = "type I verdict on lambda* = " + star->str() + ": " + out.reason;
    out.dual_weight = star;
    return out;
}

std::vector<GridEntry> classify_grid(SpacePtr space, const std::vector<Weight>& weights, bool parallel) {
    std::vector<GridEntry> out(weights.size());
    auto one = [&](std::size_t i) {
        HighestWeight hw(space, weights[i]);
        out[i].lambda = weights[i];
        out[i].dominant = hw.dominant();
        out[i].unitarisable = classify_unitarisable(hw, StarType::I).unitarisable;
    };
    if (!parallel) {
        for (std::size_t i = 0; i < weights.size(); ++i) one(i);
        return out;
    }
    std::exception_ptr failure;
    const auto n = static_cast<std::ptrdiff_t>(weights.size());
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            one(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(cgl_grid_failure)
            failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

}  // namespace cgl
