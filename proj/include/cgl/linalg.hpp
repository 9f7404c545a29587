#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "cgl/scalar.hpp"

namespace cgl {

using SparseRow = std::map<int, Scalar>;
using DenseMatrix = std::vector<std::vector<Scalar>>;

// Incremental row echelon basis over Q(q). Rows are kept with pivot 1 and
// reduced against every other stored pivot column.
class EchelonBasis {
public:
    explicit EchelonBasis(int ncols) : ncols_(ncols) {}

    // Reduces row against the basis; stores it and returns true if it is
    // independent.
    bool insert(SparseRow row);
    // True if row lies in the span.
    bool contains(SparseRow row) const;
    std::size_t rank() const { return rows_.size(); }
    int ncols() const { return ncols_; }

    // Basis of {x : r . x = 0 for all stored rows r}.
    std::vector<SparseRow> kernel() const;

private:
    void reduce(SparseRow& row) const;
    int ncols_;
    std::map<int, SparseRow> rows_;  // pivot column -> row
};

std::size_t rank_field(const std::vector<SparseRow>& rows, int ncols);
std::vector<SparseRow> nullspace_field(const std::vector<SparseRow>& rows, int ncols);

// Fraction-free rank: rows are scaled into Q[q, 1/q] and eliminated with
// Bareiss updates, each division exact.
std::size_t rank_bareiss(const DenseMatrix& m);
// The same elimination with the row updates of each pivot step spread over
// OpenMP threads.
std::size_t rank_bareiss_parallel(const DenseMatrix& m);

DenseMatrix to_dense(const std::vector<SparseRow>& rows, int ncols);

// Signature of a symmetric rational matrix by congruence diagonalisation.
struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};
Inertia inertia(std::vector<std::vector<Rational>> m);

}  // namespace cgl
