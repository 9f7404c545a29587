#pragma once

#include <cstdint>
#include <vector>

#include "cgl/partitions.hpp"
#include "cgl/weyl.hpp"

namespace cgl {

struct HoweRow {
    int degree = 0;
    std::uint64_t formula = 0;     // sum_{a+b=d} C(M+ N + a - 1, a) C(M- N, b)
    std::uint64_t enumerated = 0;  // normal monomials counted one by one
    std::uint64_t decomposition = 0;  // sum_lambda k(lambda) dim L_lambda(gl_N)
    std::vector<Partition> lambdas;
    bool ok() const { return formula == enumerated && formula == decomposition; }
};

// Degree-d rows for S(V^N), d = 0..d_max.
std::vector<HoweRow> howe_dimension_sweep(SpacePtr space, int copies, int d_max, bool parallel = true);
// The same rows for the dual Fock space S(Vbar^N), counted in d generators.
std::vector<HoweRow> howe_dual_sweep(SpacePtr space, int copies, int d_max, bool parallel = true);

struct HoweWeightCheck {
    Partition lambda;
    std::size_t weight_space_dim = 0;
    std::size_t joint_highest_dim = 0;  // expected 1
};
// For each lambda of degree d, the joint highest weight vectors of weight
// (lambda_sharp, lambda) in the Fock space, found by exact nullspace.
std::vector<HoweWeightCheck> howe_highest_weights(SpacePtr space, int copies, int d);

struct InvariantReport {
    int copies = 0, copies2 = 0, degree = 0;
    std::size_t columns = 0;         // weight-zero monomials of bidegree (d, d)
    std::size_t kernel_dim = 0;      // joint kernel of gl(V)
    std::uint64_t expected = 0;      // sum over hook lambda of dim(lambda, N) dim(lambda, N')
    std::size_t z_monomials = 0;
    bool z_in_kernel = false;
    std::size_t z_rank_field = 0;
    std::size_t z_rank_bareiss = 0;
    bool ok() const {
        return kernel_dim == expected && z_in_kernel && z_rank_field == kernel_dim && z_rank_bareiss == kernel_dim;
    }
};
// gl(V) invariants of bidegree (d, d) in S(V^N (+) Vbar^N'); ResourceError
// if the weight-zero subspace has more than max_columns monomials.
InvariantReport invariant_dimension(SpacePtr space, int copies, int copies2, int d, std::size_t max_columns = 20000);

struct GlvvRow {
    int degree = 0;
    std::vector<Partition> lambdas;
    std::vector<Weight> sharp_v;   // lambda_sharp for V
    std::vector<Weight> sharp_v2;  // lambda_sharp for V'
    std::uint64_t dimension = 0;     // dim S^d(V* (x) V')
    std::uint64_t decomposition = 0; // sum k_V(lambda) k_V'(lambda)
    bool ok() const { return dimension == decomposition; }
};
std::vector<GlvvRow> glvv_decomposition(SpacePtr v, SpacePtr v2, int d_max);

struct GlqReport {
    int m = 0, n = 0, copies = 0;
    std::size_t relations_checked = 0, relations_failed = 0;
    bool factor_ok = false;  // omega(eps_i, eps_j) = (-1)^{[i][j]} q for i < j
    std::vector<HoweRow> sweep;
    bool ok() const;
};
GlqReport glq_relations_check(int m, int n, int copies, int d_max);

}  // namespace cgl
