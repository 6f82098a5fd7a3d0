#pragma once

#include "lya/algebra.hpp"
#include "lya/cochain.hpp"
#include "lya/sparse.hpp"

#include <cstddef>

namespace lya {

// Levels and degrees:
//   level 1  <->  degree 0: Hom(g, V)
//   level l  <->  degree l-1: Hom((^2 g)^{l-1}, V) + Hom((^2 g)^{l-1} (x) g, V)
inline int level_to_degree(int level) { return level - 1; }
inline int degree_to_level(int degree) { return degree + 1; }

// Yamaguti coboundary of a V-valued cochain F (arg_dim = n, val_dim = m).
// Returns a cochain one degree higher.
Cochain yamaguti_coboundary(const LYAlgebra& alg, const Representation& rep, const Cochain& f);

// Matrix of the coboundary from `level` to `level + 1` in coordinate bases.
SparseMatrix yamaguti_matrix(const LYAlgebra& alg, const Representation& rep, int level);
SparseMatrix yamaguti_matrix_serial(const LYAlgebra& alg, const Representation& rep, int level);

struct CohomologyDims {
    int level = 0;
    std::size_t dim_c = 0;  // dim C^level
    std::size_t dim_z = 0;  // dim ker of the outgoing coboundary
    std::size_t dim_b = 0;  // rank of the incoming coboundary
    std::size_t dim_h = 0;
    std::size_t rank_out = 0;
};

// Requires level >= 2 and level <= max_level(); throws ResourceCapExceeded.
CohomologyDims cohomology_dims(const LYAlgebra& alg, const Representation& rep, int level);

}  // namespace lya
