#include "lya/deformations.hpp"

#include "lya/errors.hpp"
#include "lya/rota_baxter.hpp"

#include <string>

namespace lya {

Cochain rb_coefficient(const LYAlgebra& alg, const Representation& rep, const std::vector<Matrix>& coeffs, int s,
                       int cap)
{
    const std::size_t n = alg.dim(), m = rep.m;
    for (const Matrix& c : coeffs)
        if (c.rows() != n || c.cols() != m) throw DimensionMismatch("deformation coefficient must be n x m");
    const int top = std::min<int>(cap, static_cast<int>(coeffs.size()) - 1);
    WedgeBasis wv(m);
    Cochain r(1, m, n);
    if (s < 0 || top < 0) return r;

    // images T_i e_u, cached
    std::vector<std::vector<Vector>> img(static_cast<std::size_t>(top) + 1);
    for (int i = 0; i <= top; ++i)
        for (std::size_t u = 0; u < m; ++u) img[static_cast<std::size_t>(i)].push_back(coeffs[static_cast<std::size_t>(i)].column(u));
    auto Ti = [&](int i, std::size_t u) -> const Vector& { return img[static_cast<std::size_t>(i)][u]; };

    for (std::size_t k = 0; k < wv.size(); ++k) {
        auto [u, v] = wv.pair(k);
        Vector eu = unit(m, u), ev = unit(m, v);
        Vector b(n);
        for (int i = 0; i <= top; ++i) {
            const int j = s - i;
            if (j < 0 || j > top) continue;
            b = add(b, alg.binary(Ti(i, u), Ti(j, v)));
            Vector inner = sub(rep.rho_of(Ti(j, u)).apply(ev), rep.rho_of(Ti(j, v)).apply(eu));
            b = sub(b, coeffs[static_cast<std::size_t>(i)].apply(inner));
        }
        for (std::size_t o = 0; o < n; ++o) r.f_at(k, o) = b[o];

        for (std::size_t w = 0; w < m; ++w) {
            Vector ew = unit(m, w);
            Vector t(n);
            for (int i = 0; i <= top; ++i)
                for (int j = 0; j <= top; ++j) {
                    const int l = s - i - j;
                    if (l < 0 || l > top) continue;
                    t = add(t, alg.ternary(Ti(i, u), Ti(j, v), Ti(l, w)));
                    Vector inner = compute_D(alg, rep, Ti(j, u), Ti(l, v)).apply(ew);
                    inner = add(inner, rep.mu_of(Ti(j, v), Ti(l, w)).apply(eu));
                    inner = sub(inner, rep.mu_of(Ti(j, u), Ti(l, w)).apply(ev));
                    t = sub(t, coeffs[static_cast<std::size_t>(i)].apply(inner));
                }
            for (std::size_t o = 0; o < n; ++o) r.g_at(k, w, o) = t[o];
        }
    }
    return r;
}

namespace {

// f part as (u, v) witnesses, g part as (u, v, w).
void expect_zero_f(Check& c, const Cochain& x, const WedgeBasis& wv)
{
    for (std::size_t k = 0; k < x.tuples(); ++k) {
        Vector r(x.val_dim());
        for (std::size_t o = 0; o < x.val_dim(); ++o) r[o] = x.f_at(k, o);
        auto [u, v] = wv.pair(k);
        c.expect_zero({u, v}, r);
    }
}

void expect_zero_g(Check& c, const Cochain& x, const WedgeBasis& wv)
{
    for (std::size_t k = 0; k < x.tuples(); ++k)
        for (std::size_t w = 0; w < x.arg_dim(); ++w) {
            Vector r(x.val_dim());
            for (std::size_t o = 0; o < x.val_dim(); ++o) r[o] = x.g_at(k, w, o);
            auto [u, v] = wv.pair(k);
            c.expect_zero({u, v, w}, r);
        }
}

void expect_zero_all(Check& c, const Cochain& x)
{
    for (std::size_t k = 0; k < x.size(); ++k)
        if (sgn(x.coord(k)) != 0) c.fail({k}, {x.coord(k)});
}

void expect_zero_matrix(Check& c, std::vector<std::size_t> tuple, const Matrix& a)
{
    if (!a.is_zero()) c.fail(std::move(tuple), a.data());
}

}  // namespace

Report linear_deformation_check(const RBComplex& cx, const Matrix& Tp)
{
    const LYAlgebra& alg = cx.algebra();
    const Representation& rep = cx.representation();
    std::vector<Matrix> coeffs{cx.op(), Tp};
    WedgeBasis wv(rep.m);
    Report r;
    r.subject = "linear_deformation";
    for (int s = 1; s <= 3; ++s) {
        Cochain c = rb_coefficient(alg, rep, coeffs, s, 1);
        if (s <= 2) expect_zero_f(r.add("t" + std::to_string(s) + "_binary"), c, wv);
        expect_zero_g(r.add("t" + std::to_string(s) + "_ternary"), c, wv);
    }
    Check& rb = r.add("T'_rota_baxter");
    rb.passed = is_relative_rota_baxter(alg, rep, Tp).passed();
    if (!rb.passed) rb.violations = 1;
    expect_zero_all(r.add("T'_cocycle"), cx.coboundary(Cochain::from_matrix(Tp)));
    return r;
}

Report twisted_mc_polynomial_check(const TwistedLInfinity& tw, const Matrix& Tp)
{
    Cochain s = operator_cochain(Tp);
    Report r;
    r.subject = "twisted_maurer_cartan_polynomial";
    expect_zero_all(r.add("t1"), tw.l1(s));
    expect_zero_all(r.add("t2"), tw.l2(s, s));
    expect_zero_all(r.add("t3"), tw.l3(s, s, s));
    return r;
}

Report rb_homomorphism_check(const LYAlgebra& alg, const Representation& rep, const Matrix& T, const Matrix& Tp,
                             const Matrix& phi_g, const Matrix& phi_v)
{
    const std::size_t n = alg.dim(), m = rep.m;
    if (phi_g.rows() != n || phi_g.cols() != n || phi_v.rows() != m || phi_v.cols() != m)
        throw DimensionMismatch("homomorphism components have the wrong shape");
    Report r;
    r.subject = "rota_baxter_homomorphism";
    r.merge(is_lya_homomorphism(alg, alg, phi_g), "phi_g");
    Check& com = r.add("commutes");
    for (std::size_t v = 0; v < m; ++v)
        com.expect_zero({v}, sub(T.apply(phi_v.column(v)), phi_g.apply(Tp.column(v))));
    Check& rh = r.add("rho_intertwining");
    Check& mu = r.add("mu_intertwining");
    Check& dd = r.add("derived_D_intertwining");
    for (std::size_t x = 0; x < n; ++x) {
        Vector ex = unit(n, x), px = phi_g.column(x);
        expect_zero_matrix(rh, {x}, phi_v * rep.rho[x] - rep.rho_of(px) * phi_v);
        for (std::size_t y = 0; y < n; ++y) {
            Vector ey = unit(n, y), py = phi_g.column(y);
            expect_zero_matrix(mu, {x, y}, phi_v * rep.mu_basis(x, y) - rep.mu_of(px, py) * phi_v);
            expect_zero_matrix(dd, {x, y}, phi_v * compute_D(alg, rep, ex, ey) - compute_D(alg, rep, px, py) * phi_v);
        }
    }
    return r;
}

Matrix wedge_ternary_action(const LYAlgebra& alg, const Vector& x)
{
    const std::size_t n = alg.dim();
    WedgeBasis wb(n);
    if (x.size() != wb.size()) throw DimensionMismatch("wedge element has the wrong number of coordinates");
    Matrix r(n, n);
    for (std::size_t k = 0; k < wb.size(); ++k) {
        if (sgn(x[k]) == 0) continue;
        auto [a, b] = wb.pair(k);
        for (std::size_t z = 0; z < n; ++z) {
            Vector t = alg.ternary_basis(a, b, z);
            for (std::size_t i = 0; i < n; ++i) r(i, z) += x[k] * t[i];
        }
    }
    return r;
}

Matrix wedge_D(const LYAlgebra& alg, const Representation& rep, const Vector& x)
{
    const std::size_t n = alg.dim();
    WedgeBasis wb(n);
    if (x.size() != wb.size()) throw DimensionMismatch("wedge element has the wrong number of coordinates");
    Matrix r(rep.m, rep.m);
    for (std::size_t k = 0; k < wb.size(); ++k) {
        if (sgn(x[k]) == 0) continue;
        auto [a, b] = wb.pair(k);
        r.axpy(x[k], compute_D(alg, rep, unit(n, a), unit(n, b)));
    }
    return r;
}

namespace {

// The conditions shared by the Nijenhuis and equivalence checks: the
// Lie-Yamaguti homomorphism conditions on Id + tL and the mu conditions.
void nijenhuis_core(Report& r, const LYAlgebra& alg, const Representation& rep, const Matrix& L, const Matrix& DX)
{
    const std::size_t n = alg.dim();
    std::vector<Vector> Lx(n), ex(n);
    for (std::size_t i = 0; i < n; ++i) {
        ex[i] = unit(n, i);
        Lx[i] = L.column(i);
    }
    Check& e = r.add("nije");
    Check& c1 = r.add("nij1");
    Check& c2 = r.add("nij2");
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            e.expect_zero({x, y}, alg.binary(Lx[x], Lx[y]));
            for (std::size_t z = 0; z < n; ++z) {
                Vector a = alg.ternary(Lx[x], Lx[y], ex[z]);
                a = add(a, alg.ternary(Lx[x], ex[y], Lx[z]));
                a = add(a, alg.ternary(ex[x], Lx[y], Lx[z]));
                c1.expect_zero({x, y, z}, a);
                c2.expect_zero({x, y, z}, alg.ternary(Lx[x], Lx[y], Lx[z]));
            }
        }
    Check& c3 = r.add("nij3");
    Check& c4 = r.add("nij4");
    Check& rc = r.add("rho_compat");
    rc.advisory = true;
    rc.note = "rho([[X,x]]) D(X) = 0, the t^2 part of the rho intertwining";
    for (std::size_t z = 0; z < n; ++z) {
        expect_zero_matrix(rc, {z}, rep.rho_of(Lx[z]) * DX);
        for (std::size_t w = 0; w < n; ++w) {
            Matrix a = rep.mu_of(ex[z], Lx[w]) * DX + rep.mu_of(Lx[z], ex[w]) * DX + rep.mu_of(Lx[z], Lx[w]);
            expect_zero_matrix(c3, {z, w}, a);
            expect_zero_matrix(c4, {z, w}, rep.mu_of(Lx[z], Lx[w]) * DX);
        }
    }
}

}  // namespace

Report nijenhuis_element_check(const RBComplex& cx, const Vector& x)
{
    const LYAlgebra& alg = cx.algebra();
    const Representation& rep = cx.representation();
    const Matrix& T = cx.op();
    Matrix L = wedge_ternary_action(alg, x);
    Matrix DX = wedge_D(alg, rep, x);
    Report r;
    r.subject = "nijenhuis_element";
    nijenhuis_core(r, alg, rep, L, DX);
    Check& c5 = r.add("nij5");
    Matrix inner = T * DX - L * T;
    for (std::size_t v = 0; v < rep.m; ++v) c5.expect_zero({v}, L.apply(inner.column(v)));
    return r;
}

TrivialDeformation trivial_deformation_from_nijenhuis(const RBComplex& cx, const Vector& x,
                                                      const std::vector<Scalar>& ts)
{
    Report nij = nijenhuis_element_check(cx, x);
    if (!nij.passed()) throw NotNijenhuis("wedge element is not a Nijenhuis element of the operator");
    const LYAlgebra& alg = cx.algebra();
    const Representation& rep = cx.representation();
    TrivialDeformation out;
    out.Tp = cx.delta0(x);
    out.linear = linear_deformation_check(cx, out.Tp);
    Matrix L = wedge_ternary_action(alg, x);
    Matrix DX = wedge_D(alg, rep, x);
    for (const Scalar& t : ts) {
        Matrix Tt = cx.op() + out.Tp.scaled(t);
        Matrix pg = Matrix::identity(alg.dim()) + L.scaled(t);
        Matrix pv = Matrix::identity(rep.m) + DX.scaled(t);
        out.witnesses.emplace_back(t, rb_homomorphism_check(alg, rep, cx.op(), Tt, pg, pv));
    }
    return out;
}

Report equivalence_check(const RBComplex& cx, const Matrix& T1, const Matrix& T2, const Vector& x)
{
    const LYAlgebra& alg = cx.algebra();
    const Representation& rep = cx.representation();
    Matrix L = wedge_ternary_action(alg, x);
    Matrix DX = wedge_D(alg, rep, x);
    Report r;
    r.subject = "equivalence";
    nijenhuis_core(r, alg, rep, L, DX);
    Check& co = r.add("cocycle");
    Matrix diff = T2 - T1 - cx.delta0(x);
    for (std::size_t v = 0; v < rep.m; ++v) co.expect_zero({v}, diff.column(v));
    Check& aux = r.add("aux_T1_D");
    aux.advisory = true;
    Matrix a = T1 * DX - L * T2;
    for (std::size_t v = 0; v < rep.m; ++v) aux.expect_zero({v}, a.column(v));
    Check& same = r.add("same_class");
    SolveResult s = cx.coboundary_solve(Cochain::from_matrix(T2 - T1));
    if (!s.feasible) {
        same.passed = false;
        same.violations = 1;
        same.residual = s.certificate;
        same.note = "difference is not a coboundary; residual holds the infeasibility certificate";
    }
    return r;
}

Report order_n_check(const LYAlgebra& alg, const Representation& rep, const std::vector<Matrix>& coeffs)
{
    if (coeffs.empty()) throw DimensionMismatch("deformation needs at least the base operator");
    const int n = static_cast<int>(coeffs.size()) - 1;
    WedgeBasis wv(rep.m);
    Report r;
    r.subject = "order_" + std::to_string(n) + "_deformation";
    for (int s = 0; s <= n; ++s) {
        Cochain c = rb_coefficient(alg, rep, coeffs, s, n);
        expect_zero_f(r.add("s" + std::to_string(s) + "_binary"), c, wv);
        expect_zero_g(r.add("s" + std::to_string(s) + "_ternary"), c, wv);
    }
    return r;
}

Obstruction obstruction_class(const RBComplex& cx, const std::vector<Matrix>& coeffs)
{
    const LYAlgebra& alg = cx.algebra();
    const Representation& rep = cx.representation();
    if (coeffs.empty() || !(coeffs[0] == cx.op()))
        throw NotVerifiedDeformation("the first deformation coefficient must be the base operator");
    if (!order_n_check(alg, rep, coeffs).passed())
        throw NotVerifiedDeformation("coefficients do not form an order-n deformation");
    const int n = static_cast<int>(coeffs.size()) - 1;
    Obstruction out;
    out.ob = rb_coefficient(alg, rep, coeffs, n + 1, n);
    out.report.subject = "obstruction";
    expect_zero_all(out.report.add("ob_cocycle"), cx.coboundary(out.ob));
    SolveResult s = cx.coboundary_solve(out.ob.scaled(-1));
    Check& tr = out.report.add("class_trivial");
    if (!s.feasible) {
        tr.passed = false;
        tr.violations = 1;
        tr.note = "-Ob is not a coboundary; the certificate y has y.A = 0 and y.(-Ob) = 1";
        out.certificate = s.certificate;
        return out;
    }
    Matrix ext = Cochain::from_coords(0, rep.m, alg.dim(), s.solution).to_matrix();
    std::vector<Matrix> next = coeffs;
    next.push_back(ext);
    Report ord = order_n_check(alg, rep, next);
    Check& ex = out.report.add("extension_verified");
    if (!ord.passed()) {
        ex.passed = false;
        ex.violations = 1;
        ex.note = "extension fails the order-" + std::to_string(n + 1) + " identities";
    }
    out.extension = ext;
    return out;
}

}  // namespace lya
