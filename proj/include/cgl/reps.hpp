#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cgl/gl_algebra.hpp"
#include "cgl/partitions.hpp"

namespace cgl {

// A weight together with the space it lives on. Coordinates are rational,
// so every highest weight here is real.
struct HighestWeight {
    SpacePtr space;
    Weight lambda;

    HighestWeight(SpacePtr s, Weight l);
    // lambda_a - lambda_b in Z_+ for a < b inside each parity block.
    bool dominant() const;
    // Integral on each block: all even coordinates differ by integers, and
    // likewise the odd ones.
    bool block_integral() const;
    // (lambda_1 .. lambda_{M+}) and (lambda_1' .. lambda_{M-}').
    Weight plus() const;
    Weight minus() const;
};

bool is_finite_dimensional(const HighestWeight& hw);

struct Typicality {
    bool typical = true;
    Rational chi = 1;  // prod over odd positive roots of (lambda + rho, eps_i - eps_r')
};
Typicality typicality(const HighestWeight& hw);

// 2^{M+ M-} dim L0; DomainError unless dominant.
std::uint64_t kac_dimension(const HighestWeight& hw);
// dim L0 = dim L(lambda+) for gl(V+) times dim L(lambda-) for gl(V-).
std::uint64_t levi_dimension(const HighestWeight& hw);

// (lambda + 2 rho, lambda).
Rational casimir_eigenvalue(const HighestWeight& hw);

struct CasimirCheck {
    Partition lambda;
    Weight sharp;
    Rational eigenvalue;
    std::size_t defect = 0;  // words where Omega v - c v is nonzero
};
// Omega = sum_{a,b} omega(gamma_b, gamma_b) E_ab E_ba applied to the highest
// weight vector of lambda in V^{(x) |lambda|}.
CasimirCheck casimir_check(SpacePtr space, const Partition& lambda);

// a*Eps + mu_sharp - b*Eps_+, with b = 0 for the first family.
struct UnitaryCertificate {
    Rational a;
    Partition mu;
    Rational b;
    std::string str() const;
};

enum class StarType { I, II };

struct UnitarityVerdict {
    bool unitarisable = false;
    std::string reason;                         // route taken or condition violated
    std::optional<UnitaryCertificate> certificate;
    std::optional<Weight> dual_weight;          // lambda*, type II only
    Rational boundary;                          // (lambda + rho, eps_{M+} - eps_{M-'}) when defined
};

// Type I through the typical / atypical conditions on lambda + rho.
UnitarityVerdict unitarisable_by_conditions(const HighestWeight& hw);
// Type I by searching lambda = a Eps + mu_sharp (- b Eps_+).
UnitarityVerdict unitarisable_by_decomposition(const HighestWeight& hw);
// Both routes must agree for type I; type II passes lambda* to type I.
// UnsupportedError for q-valued factors, or when lambda* is unavailable.
UnitarityVerdict classify_unitarisable(const HighestWeight& hw, StarType type);

// Highest weight of the dual module; nullopt when it is not computed
// (atypical weights that are not tensor weights up to a character).
std::optional<Weight> dual_weight(const HighestWeight& hw);

struct GridEntry {
    Weight lambda;
    bool dominant = false;
    bool unitarisable = false;
};
// Type I verdicts for a batch of weights; the parallel and serial paths
// give identical output.
std::vector<GridEntry> classify_grid(SpacePtr space, const std::vector<Weight>& weights, bool parallel = true);

}  // namespace cgl
