#include "lya/rota_baxter.hpp"

#include "lya/errors.hpp"

namespace lya {

namespace {

void require_operator(const LYAlgebra& alg, const Representation& rep, const Matrix& T)
{
    if (rep.n != alg.dim()) throw DimensionMismatch("representation does not match the algebra");
    if (T.rows() != alg.dim() || T.cols() != rep.m)
        throw DimensionMismatch("operator must be an n x m matrix (V -> g)");
}

}  // namespace

Vector rb_binary_residual(const LYAlgebra& alg, const Representation& rep, const Matrix& T, std::size_t u,
                          std::size_t v)
{
    const std::size_t m = rep.m;
    Vector Tu = T.column(u), Tv = T.column(v);
    Vector inner = sub(rep.rho_of(Tu).apply(unit(m, v)), rep.rho_of(Tv).apply(unit(m, u)));
    return sub(alg.binary(Tu, Tv), T.apply(inner));
}

Vector rb_ternary_residual(const LYAlgebra& alg, const Representation& rep, const Matrix& T, std::size_t u,
                           std::size_t v, std::size_t w)
{
    const std::size_t m = rep.m;
    Vector Tu = T.column(u), Tv = T.column(v), Tw = T.column(w);
    Vector inner = compute_D(alg, rep, Tu, Tv).apply(unit(m, w));
    inner = add(inner, rep.mu_of(Tv, Tw).apply(unit(m, u)));
    inner = sub(inner, rep.mu_of(Tu, Tw).apply(unit(m, v)));
    return sub(alg.ternary(Tu, Tv, Tw), T.apply(inner));
}

Report is_relative_rota_baxter(const LYAlgebra& alg, const Representation& rep, const Matrix& T)
{
    require_operator(alg, rep, T);
    const std::size_t m = rep.m;
    Report r;
    r.subject = "relative_rota_baxter";
    Check& b = r.add("binary");
    Check& t = r.add("ternary");
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v) {
            b.expect_zero({u, v}, rb_binary_residual(alg, rep, T, u, v));
            for (std::size_t w = 0; w < m; ++w) t.expect_zero({u, v, w}, rb_ternary_residual(alg, rep, T, u, v, w));
        }
    return r;
}

BigSpaceContext::BigSpaceContext(const LYAlgebra& alg, const Representation& rep)
    : alg_(alg), rep_(rep), n_(alg.dim()), m_(rep.m), wv_(rep.m), wb_(alg.dim() + rep.m)
{
    if (rep.n != n_) throw DimensionMismatch("representation does not match the algebra");
    for (std::size_t k = 0; k < wv_.size(); ++k) {
        auto [a, b] = wv_.pair(k);
        v_to_big_.push_back(wb_.index(n_ + a, n_ + b));
    }
    delta_ = algebra_to_pi(semidirect_product(alg, rep));
}

Cochain BigSpaceContext::lift(const Cochain& p) const
{
    if (p.arg_dim() != m_ || p.val_dim() != n_) throw DimensionMismatch("lift expects a V-argument, g-valued cochain");
    const std::size_t N = n_ + m_, WV = wv_.size(), WB = wb_.size();
    Cochain r(p.degree(), N, N);
    const std::size_t len = static_cast<std::size_t>(p.degree());
    std::vector<std::size_t> digits(len);
    for (std::size_t t = 0; t < p.tuples(); ++t) {
        for (std::size_t i = len, x = t; i-- > 0;) {
            digits[i] = x % WV;
            x /= WV;
        }
        std::size_t bt = 0;
        for (std::size_t i = 0; i < len; ++i) bt = bt * WB + v_to_big_[digits[i]];
        for (std::size_t out = 0; out < n_; ++out) {
            if (p.degree() >= 1) r.f_at(bt, out) = p.f_at(t, out);
            for (std::size_t x = 0; x < m_; ++x) r.g_at(bt, n_ + x, out) = p.g_at(t, x, out);
        }
    }
    return r;
}

Cochain BigSpaceContext::project(const Cochain& q) const
{
    const std::size_t N = n_ + m_, WV = wv_.size(), WB = wb_.size();
    if (q.arg_dim() != N || q.val_dim() != N) throw DimensionMismatch("project expects a cochain on g + V");
    Cochain r(q.degree(), m_, n_);
    const std::size_t len = static_cast<std::size_t>(q.degree());
    std::vector<std::size_t> digits(len);
    for (std::size_t t = 0; t < r.tuples(); ++t) {
        for (std::size_t i = len, x = t; i-- > 0;) {
            digits[i] = x % WV;
            x /= WV;
        }
        std::size_t bt = 0;
        for (std::size_t i = 0; i < len; ++i) bt = bt * WB + v_to_big_[digits[i]];
        for (std::size_t out = 0; out < n_; ++out) {
            if (q.degree() >= 1) r.f_at(t, out) = q.f_at(bt, out);
            for (std::size_t x = 0; x < m_; ++x) r.g_at(t, x, out) = q.g_at(bt, n_ + x, out);
        }
    }
    return r;
}

Cochain BigSpaceContext::project_bracket(const Cochain& a, const Cochain& b) const
{
    const std::size_t N = n_ + m_, WV = wv_.size(), WB = wb_.size();
    if (a.arg_dim() != N || b.arg_dim() != N) throw DimensionMismatch("project_bracket expects cochains on g + V");
    const int degree = a.degree() + b.degree();
    Cochain r(degree, m_, n_);
    const std::size_t len = static_cast<std::size_t>(degree);
    std::vector<std::size_t> big(r.tuples()), digits(len);
    for (std::size_t t = 0; t < r.tuples(); ++t) {
        for (std::size_t i = len, x = t; i-- > 0;) {
            digits[i] = x % WV;
            x /= WV;
        }
        std::size_t bt = 0;
        for (std::size_t i = 0; i < len; ++i) bt = bt * WB + v_to_big_[digits[i]];
        big[t] = bt;
    }
    std::vector<TupleValue> vals = graded_bracket_at(a, b, big);
    for (std::size_t t = 0; t < r.tuples(); ++t)
        for (std::size_t out = 0; out < n_; ++out) {
            if (degree >= 1) r.f_at(t, out) = vals[t].f[out];
            for (std::size_t x = 0; x < m_; ++x) r.g_at(t, x, out) = vals[t].g[n_ + x][out];
        }
    return r;
}

Cochain BigSpaceContext::lk(const std::vector<const Cochain*>& args) const
{
    if (args.empty()) return project(delta_);
    Cochain acc = delta_;
    for (std::size_t i = 0; i + 1 < args.size(); ++i) acc = graded_bracket(acc, lift(*args[i]));
    return project_bracket(acc, lift(*args.back()));
}

Cochain operator_cochain(const Matrix& T) { return Cochain::from_matrix(T); }

namespace {

void zero_check(Check& c, const Cochain& x)
{
    for (std::size_t k = 0; k < x.size(); ++k)
        if (sgn(x.coord(k)) != 0) c.fail({k}, {x.coord(k)});
}

}  // namespace

Report strict_mc_check(const BigSpaceContext& ctx, const Matrix& T)
{
    require_operator(ctx.algebra(), ctx.representation(), T);
    Cochain t = operator_cochain(T);
    Report r;
    r.subject = "strict_maurer_cartan";
    zero_check(r.add("l2_vanishes"), ctx.l2(t, t));
    zero_check(r.add("l3_vanishes"), ctx.l3(t, t, t));
    return r;
}

Cochain l2_closed_form(const LYAlgebra& alg, const Representation& rep, const Matrix& T)
{
    require_operator(alg, rep, T);
    WedgeBasis wv(rep.m);
    Cochain r(1, rep.m, alg.dim());
    for (std::size_t k = 0; k < wv.size(); ++k) {
        auto [u, v] = wv.pair(k);
        Vector x = rb_binary_residual(alg, rep, T, u, v);
        for (std::size_t o = 0; o < alg.dim(); ++o) r.f_at(k, o) = 2 * x[o];
    }
    return r;
}

Cochain l3_closed_form(const LYAlgebra& alg, const Representation& rep, const Matrix& T)
{
    require_operator(alg, rep, T);
    WedgeBasis wv(rep.m);
    Cochain r(1, rep.m, alg.dim());
    for (std::size_t k = 0; k < wv.size(); ++k) {
        auto [u, v] = wv.pair(k);
        for (std::size_t w = 0; w < rep.m; ++w) {
            Vector x = rb_ternary_residual(alg, rep, T, u, v, w);
            for (std::size_t o = 0; o < alg.dim(); ++o) r.g_at(k, w, o) = 6 * x[o];
        }
    }
    return r;
}

TwistedLInfinity::TwistedLInfinity(const BigSpaceContext& ctx, const Matrix& T) : ctx_(&ctx), T_(T)
{
    if (!is_relative_rota_baxter(ctx.algebra(), ctx.representation(), T).passed())
        throw NotRotaBaxter("operator is not a relative Rota-Baxter operator");
    Cochain lt = ctx.lift(operator_cochain(T));
    Cochain dt = graded_bracket(ctx.delta(), lt);
    Cochain dtt = graded_bracket(dt, lt);
    d1_ = dt + dtt.scaled(Scalar(1, 2));
    d2_ = ctx.delta() + dt;
}

Cochain TwistedLInfinity::l1(const Cochain& p) const { return ctx_->project_bracket(d1_, ctx_->lift(p)); }

Cochain TwistedLInfinity::l2(const Cochain& p, const Cochain& q) const
{
    return ctx_->project_bracket(graded_bracket(d2_, ctx_->lift(p)), ctx_->lift(q));
}

Cochain TwistedLInfinity::l3(const Cochain& p, const Cochain& q, const Cochain& r) const { return ctx_->l3(p, q, r); }

Report twisted_mc_check(const TwistedLInfinity& tw, const Matrix& Tp)
{
    Cochain s = operator_cochain(Tp);
    Cochain l1 = tw.l1(s);
    Cochain l2 = tw.l2(s, s);
    Cochain l3 = tw.l3(s, s, s);
    Cochain e = l1 + l2.scaled(Scalar(1, 2)) + l3.scaled(Scalar(1, 6));

    Report r;
    r.subject = "twisted_maurer_cartan";
    zero_check(r.add("mc_expression_vanishes"), e);
    // 2 l1(T') + l2(T',T') + l3(T',T',T')/3 split by component: the f part is
    // 2 l2(T,T') + l2(T',T'), the g part is 3 l3(T,T,T') + 3 l3(T,T',T') + l3(T',T',T').
    Cochain six_e = e.scaled(6);
    Cochain bin(1, s.arg_dim(), s.val_dim()), ter(1, s.arg_dim(), s.val_dim());
    for (std::size_t k = 0; k < bin.f().size(); ++k) bin.f()[k] = six_e.f()[k] / 3;
    for (std::size_t k = 0; k < ter.g().size(); ++k) ter.g()[k] = six_e.g()[k];
    Check& cb = r.add("binary_component");
    Check& ct = r.add("ternary_component");
    cb.advisory = ct.advisory = true;
    cb.note = "2 l2(T,T') + l2(T',T')";
    ct.note = "3 l3(T,T,T') + 3 l3(T,T',T') + l3(T',T',T')";
    zero_check(cb, bin);
    zero_check(ct, ter);
    return r;
}

LYAlgebra sub_adjacent_lya(const LYAlgebra& alg, const Representation& rep, const Matrix& T)
{
    require_operator(alg, rep, T);
    if (!is_relative_rota_baxter(alg, rep, T).passed())
        throw NotRotaBaxter("operator is not a relative Rota-Baxter operator");
    const std::size_t m = rep.m;
    LYAlgebra out(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            Vector Tu = T.column(i), Tv = T.column(j), u = unit(m, i), v = unit(m, j);
            out.set_binary(i, j, sub(rep.rho_of(Tu).apply(v), rep.rho_of(Tv).apply(u)));
            for (std::size_t k = 0; k < m; ++k) {
                Vector Tw = T.column(k), w = unit(m, k);
                Vector x = compute_D(alg, rep, Tu, Tv).apply(w);
                x = add(x, rep.mu_of(Tv, Tw).apply(u));
                x = sub(x, rep.mu_of(Tu, Tw).apply(v));
                out.set_ternary(i, j, k, x);
            }
        }
    return out;
}

Representation induced_representation(const LYAlgebra& alg, const Representation& rep, const Matrix& T)
{
    require_operator(alg, rep, T);
    if (!is_relative_rota_baxter(alg, rep, T).passed())
        throw NotRotaBaxter("operator is not a relative Rota-Baxter operator");
    const std::size_t n = alg.dim(), m = rep.m;
    Representation out(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        Vector Tu = T.column(i), u = unit(m, i);
        for (std::size_t x = 0; x < n; ++x) {
            Vector ex = unit(n, x);
            out.rho[i].set_column(x, add(alg.binary(Tu, ex), T.apply(rep.rho_of(ex).apply(u))));
        }
        for (std::size_t j = 0; j < m; ++j) {
            Vector Tv = T.column(j), v = unit(m, j);
            for (std::size_t x = 0; x < n; ++x) {
                Vector ex = unit(n, x);
                Vector inner = sub(compute_D(alg, rep, ex, Tu).apply(v), rep.mu_of(ex, Tv).apply(u));
                out.mu_basis(i, j).set_column(x, sub(alg.ternary(ex, Tu, Tv), T.apply(inner)));
            }
        }
    }
    return out;
}

Matrix induced_D_closed_form(const LYAlgebra& alg, const Representation& rep, const Matrix& T, const Vector& u,
                             const Vector& v)
{
    require_operator(alg, rep, T);
    const std::size_t n = alg.dim();
    Vector Tu = T.apply(u), Tv = T.apply(v);
    Matrix r(n, n);
    for (std::size_t x = 0; x < n; ++x) {
        Vector ex = unit(n, x);
        Vector inner = sub(rep.mu_of(Tv, ex).apply(u), rep.mu_of(Tu, ex).apply(v));
        r.set_column(x, sub(alg.ternary(Tu, Tv, ex), T.apply(inner)));
    }
    return r;
}

Matrix nijenhuis_from_operator(const Matrix& T)
{
    const std::size_t n = T.rows(), m = T.cols();
    return block(Matrix(n, n), T, Matrix(m, n), Matrix(m, m));
}

}  // namespace lya
