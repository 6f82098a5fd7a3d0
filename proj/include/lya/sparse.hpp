#pragma once

#include "lya/matrix.hpp"
#include "lya/scalar.hpp"

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace lya {

// Sorted (index, value) pairs with nonzero values.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

SparseVector sparsify(const Vector& v);
Vector densify(const SparseVector& v, std::size_t n);

// Column-major sparse matrix; columns are assembled independently.
struct SparseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<SparseVector> columns;

    static SparseMatrix from_dense(const Matrix& a);
    Matrix to_dense() const;
    SparseMatrix transpose() const;
    Vector apply(const Vector& x) const;
    bool operator==(const SparseMatrix&) const = default;
};

// Builds column j from column(j) for j < cols. The OpenMP version hands
// out columns dynamically; output is identical to the serial one.
SparseMatrix assemble_columns(std::size_t rows, std::size_t cols,
                              const std::function<Vector(std::size_t)>& column);
SparseMatrix assemble_columns_serial(std::size_t rows, std::size_t cols,
                                     const std::function<Vector(std::size_t)>& column);

// Rank by fraction-free elimination over Z (rows kept primitive).
std::size_t rank(const SparseMatrix& a);
std::size_t rank(const Matrix& a);

struct SolveResult {
    bool feasible = false;
    Vector solution;     // pivot solution: non-pivot columns set to zero
    Vector certificate;  // if infeasible: y with y^T A = 0 and y^T b = 1
};

SolveResult solve(const SparseMatrix& a, const Vector& b);

// One kernel vector per non-pivot column j, normalized to x_j = 1.
std::vector<Vector> kernel_basis(const SparseMatrix& a);

}  // namespace lya
