#pragma once

#include "lya/algebra.hpp"
#include "lya/cochain.hpp"
#include "lya/matrix.hpp"
#include "lya/rb_cohomology.hpp"
#include "lya/report.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace lya {

// t^s coefficient of the two Rota-Baxter identities for T_t = sum_i t^i coeffs[i]:
//   sum_{i+j=s} [T_i u, T_j v] - T_i(rho(T_j u)v - rho(T_j v)u)
//   sum_{i+j+k=s} [[T_i u, T_j v, T_k w]] - T_i(D(T_j u, T_k v)w + mu(T_j v, T_k w)u - mu(T_j u, T_k w)v)
// Only index tuples with every index <= `cap` contribute.
Cochain rb_coefficient(const LYAlgebra& alg, const Representation& rep, const std::vector<Matrix>& coeffs,
                       int s, int cap);

// T + t T' is Rota-Baxter for all t: every t-coefficient identity, plus
// "T'_rota_baxter" and "T'_cocycle" as consequences.
Report linear_deformation_check(const RBComplex& cx, const Matrix& Tp);

// Zero iff T + t T' is Rota-Baxter for all t: the t, t^2, t^3 parts of the
// twisted Maurer-Cartan expression of t T'.
Report twisted_mc_polynomial_check(const TwistedLInfinity& tw, const Matrix& Tp);

// (phi_g, phi_V) from T' to T.
Report rb_homomorphism_check(const LYAlgebra& alg, const Representation& rep, const Matrix& T,
                             const Matrix& Tp, const Matrix& phi_g, const Matrix& phi_v);

// L_X x = [[x1, y1, x]] and D(X) for X = sum c x1 ^ y1 over the wedge basis.
Matrix wedge_ternary_action(const LYAlgebra& alg, const Vector& x);
Matrix wedge_D(const LYAlgebra& alg, const Representation& rep, const Vector& x);

// Checks "nije", "nij1", "nij2", "nij3", "nij4", "nij5" on all basis tuples.
// "rho_compat" (rho(L_X x) D(X) = 0) is reported as a note-only check and
// does not affect passed().
Report nijenhuis_element_check(const RBComplex& cx, const Vector& x);

struct TrivialDeformation {
    Matrix Tp;  // delta0(X)
    Report linear;
    std::vector<std::pair<Scalar, Report>> witnesses;
};

// Throws NotNijenhuis.
TrivialDeformation trivial_deformation_from_nijenhuis(const RBComplex& cx, const Vector& x,
                                                      const std::vector<Scalar>& ts);

// Conditions of equivalence of T + t T1 and T + t T2 via X. The check
// "aux_T1_D" is reported but does not decide the class comparison.
Report equivalence_check(const RBComplex& cx, const Matrix& T1, const Matrix& T2, const Vector& x);

// coeffs[0] = T; checks the t^s identities for s = 0..n.
Report order_n_check(const LYAlgebra& alg, const Representation& rep, const std::vector<Matrix>& coeffs);

struct Obstruction {
    Cochain ob;              // level-2 V-cochain
    Report report;
    std::optional<Matrix> extension;
    Vector certificate;      // infeasibility witness when no extension exists
};

// Throws NotVerifiedDeformation.
Obstruction obstruction_class(const RBComplex& cx, const std::vector<Matrix>& coeffs);

}  // namespace lya
