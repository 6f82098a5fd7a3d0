#pragma once

#include "lya/algebra.hpp"
#include "lya/cochain.hpp"
#include "lya/report.hpp"
#include "lya/rota_baxter.hpp"
#include "lya/sparse.hpp"
#include "lya/yamaguti.hpp"

#include <cstddef>
#include <optional>

namespace lya {

// Cochain complex of a relative Rota-Baxter operator T: V -> g.
//   level 0: ^2 g (coordinate vectors over the wedge basis of g)
//   level l >= 1: V-cochains of degree l - 1 (arg_dim = m, val_dim = n)
class RBComplex {
public:
    // Throws NotRotaBaxter.
    RBComplex(const LYAlgebra& alg, const Representation& rep, const Matrix& T);

    const LYAlgebra& algebra() const { return alg_; }
    const Representation& representation() const { return rep_; }
    const Matrix& op() const { return T_; }
    const LYAlgebra& sub_adjacent() const { return sub_; }
    const Representation& induced() const { return induced_; }
    const WedgeBasis& wedges() const { return wg_; }

    // v -> T D(X) v - [[X, Tv]]
    Matrix delta0(const Vector& x) const;

    // Coboundary of a level >= 1 cochain, via the Yamaguti coboundary of the
    // sub-adjacent algebra with coefficients in the induced representation.
    Cochain coboundary(const Cochain& f) const;
    // The same map, expanded directly in terms of T, rho, mu and the brackets.
    Cochain coboundary_explicit(const Cochain& f) const;

    std::size_t level_dim(int level) const;
    // Matrix of the coboundary from `level` to `level + 1` (level 0 is delta0).
    // Throws ResourceCapExceeded when level > max_level().
    SparseMatrix matrix(int level) const;
    SparseMatrix matrix_serial(int level) const;

    // level >= 1; at level 1, B is the image of delta0.
    CohomologyDims dims(int level) const;
    // Kernel of delta0 (not called H^0).
    std::size_t level0_kernel() const;

    bool is_cocycle(const Cochain& f) const;
    // Solves coboundary(x) = g for x one level below g.
    SolveResult coboundary_solve(const Cochain& g) const;

private:
    LYAlgebra alg_;
    Representation rep_;
    Matrix T_;
    LYAlgebra sub_;
    Representation induced_;
    WedgeBasis wg_;
};

// Compares the coboundary with l1 of the twisted structure:
// d(F) = (-1)^{l-1} l1(F) for F at level l (so d(f) = l1(f) at level 1).
// "stated_sign" decides; "equals_plus_l1" and "equals_minus_l1" are notes.
Report theorem_diff_oracle(const RBComplex& cx, const TwistedLInfinity& tw, const Cochain& f);

}  // namespace lya
