#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cgl/gl_algebra.hpp"

namespace cgl {

struct SuiteResult {
    std::string name;
    std::string space;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::vector<std::string> failed;  // first few failing cases
    double seconds = 0;
    bool passed() const { return failures == 0 && checks > 0; }
};

// Bicharacter identities on degrees of Gamma_R and their differences,
// Jacobi and skew defects over all basis triples, braid and Coxeter
// relations of the sigma_i on every basis word of V^{(x) r}, r <= r_max.
SuiteResult axioms_suite(SpacePtr v, int r_max);
// Random sampling of the bicharacter identities and of Scalar field
// arithmetic; reproducible from the seed.
SuiteResult sampling_suite(SpacePtr v, std::uint64_t seed, int samples);
SuiteResult schur_weyl_suite(SpacePtr v, int r_max, std::uint64_t max_words = 1000000);
// Dimension sweeps for N <= copies_max, d <= d_max (Fock and dual Fock),
// the Fock relations, and the joint highest weight spaces for d <= hw_degree.
SuiteResult howe_suite(SpacePtr v, int copies_max, int d_max, int hw_degree);
// (N, N') in {(1,1), (2,1), (2,2)}, d <= d_max.
SuiteResult fft_suite(SpacePtr v, int d_max);
SuiteResult glq_suite(int m, int n, int copies_max, int d_max);
// Hook partitions with |lambda| <= size_max: Kac dimension against k(lambda).
SuiteResult typicality_suite(SpacePtr v, int size_max);
// The gl(1|1) product chi = lambda_1 + lambda_1' on a seeded rational sample.
SuiteResult chi_suite(std::uint64_t seed, int samples);
SuiteResult casimir_suite(SpacePtr v, int r_max);
// Full-depth Gram verdicts against the type I classification on a rational
// grid of dominant weights, typicality against the radical, and the
// classification of every lambda_sharp with |lambda| <= r_max.
SuiteResult unitarity_suite(SpacePtr v, int r_max, std::size_t min_weights = 50);
// Dual pair brackets and level-2 invariants for N <= copies_max.
SuiteResult dual_pair_suite(SpacePtr v, int copies_max);

// Dominant weights used by unitarity_suite.
std::vector<Weight> unitarity_grid(const GradedSpace& v, std::size_t min_weights);

// One-line description of a space for reports.
std::string space_summary(const GradedSpace& v);

enum class VerifyLevel { quick, full };
// Every suite that applies to the space.
std::vector<SuiteResult> verify_space(SpacePtr v, VerifyLevel level, std::uint64_t seed);

}  // namespace cgl
