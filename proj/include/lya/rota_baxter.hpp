#pragma once

#include "lya/algebra.hpp"
#include "lya/cochain.hpp"
#include "lya/matrix.hpp"
#include "lya/report.hpp"

#include <cstddef>
#include <vector>

namespace lya {

// Checks [Tu,Tv] = T(rho(Tu)v - rho(Tv)u) ("binary") and
// [[Tu,Tv,Tw]] = T(D(Tu,Tv)w + mu(Tv,Tw)u - mu(Tu,Tw)v) ("ternary").
// T is an n x m matrix whose columns are the images of the V basis.
Report is_relative_rota_baxter(const LYAlgebra& alg, const Representation& rep, const Matrix& T);

// Residuals of the two identities at basis arguments.
Vector rb_binary_residual(const LYAlgebra& alg, const Representation& rep, const Matrix& T,
                          std::size_t u, std::size_t v);
Vector rb_ternary_residual(const LYAlgebra& alg, const Representation& rep, const Matrix& T,
                           std::size_t u, std::size_t v, std::size_t w);

// Cochains on g + V built from a representation, with the embedding of
// V-argument, g-valued cochains ("V-cochains": arg_dim = m, val_dim = n).
class BigSpaceContext {
public:
    BigSpaceContext(const LYAlgebra& alg, const Representation& rep);

    std::size_t n() const { return n_; }
    std::size_t m() const { return m_; }
    const LYAlgebra& algebra() const { return alg_; }
    const Representation& representation() const { return rep_; }
    // Degree-1 element encoding the semidirect product.
    const Cochain& delta() const { return delta_; }

    Cochain lift(const Cochain& p) const;
    Cochain project(const Cochain& q) const;
    // project([a, b]), evaluating the bracket only where the projection reads it.
    Cochain project_bracket(const Cochain& a, const Cochain& b) const;

    // project([...[[delta, lift a1], lift a2]..., lift ak])
    Cochain lk(const std::vector<const Cochain*>& args) const;
    Cochain l2(const Cochain& p, const Cochain& q) const { return lk({&p, &q}); }
    Cochain l3(const Cochain& p, const Cochain& q, const Cochain& r) const { return lk({&p, &q, &r}); }

private:
    LYAlgebra alg_;
    Representation rep_;
    std::size_t n_, m_;
    WedgeBasis wv_, wb_;
    std::vector<std::size_t> v_to_big_;  // V wedge index -> big wedge index
    Cochain delta_;
};

Cochain operator_cochain(const Matrix& T);

// Reports l2(T,T) = 0 and l3(T,T,T) = 0.
Report strict_mc_check(const BigSpaceContext& ctx, const Matrix& T);

// 2([Tu,Tv] - T(rho(Tu)v - rho(Tv)u)) as the f part of a degree-1 V-cochain.
Cochain l2_closed_form(const LYAlgebra& alg, const Representation& rep, const Matrix& T);
// 6([[Tu,Tv,Tw]] - T(...)) as the g part of a degree-1 V-cochain.
Cochain l3_closed_form(const LYAlgebra& alg, const Representation& rep, const Matrix& T);

// l1(P) = l2(T,P) + l3(T,T,P)/2, l2(P,Q) = l2(P,Q) + l3(T,P,Q), l3 = l3.
class TwistedLInfinity {
public:
    // Throws NotRotaBaxter.
    TwistedLInfinity(const BigSpaceContext& ctx, const Matrix& T);

    const Matrix& op() const { return T_; }
    Cochain l1(const Cochain& p) const;
    Cochain l2(const Cochain& p, const Cochain& q) const;
    Cochain l3(const Cochain& p, const Cochain& q, const Cochain& r) const;

private:
    const BigSpaceContext* ctx_;
    Matrix T_;
    Cochain d1_;  // [delta, T] + [[delta, T], T] / 2
    Cochain d2_;  // delta + [delta, T]
};

// l1(T') + l2(T',T')/2 + l3(T',T',T')/6, plus the per-degree breakdown
// 2 l2(T,T') + l2(T',T') and 3 l3(T,T,T') + 3 l3(T,T',T') + l3(T',T',T').
Report twisted_mc_check(const TwistedLInfinity& tw, const Matrix& Tp);

// [u,v]_T = rho(Tu)v - rho(Tv)u, [[u,v,w]]_T = D(Tu,Tv)w + mu(Tv,Tw)u - mu(Tu,Tw)v.
// Both throw NotRotaBaxter.
LYAlgebra sub_adjacent_lya(const LYAlgebra& alg, const Representation& rep, const Matrix& T);
// varrho(u)x = [Tu,x] + T(rho(x)u), varpi(u,v)x = [[x,Tu,Tv]] - T(D(x,Tu)v - mu(x,Tv)u).
Representation induced_representation(const LYAlgebra& alg, const Representation& rep, const Matrix& T);
// [[Tu,Tv,x]] - T(mu(Tv,x)u - mu(Tu,x)v)
Matrix induced_D_closed_form(const LYAlgebra& alg, const Representation& rep, const Matrix& T,
                             const Vector& u, const Vector& v);

// [[0, T], [0, 0]] on g + V.
Matrix nijenhuis_from_operator(const Matrix& T);

}  // namespace lya
