#include "lya/rb_cohomology.hpp"

#include "lya/errors.hpp"
#include "lya/limits.hpp"

#include <string>

namespace lya {

RBComplex::RBComplex(const LYAlgebra& alg, const Representation& rep, const Matrix& T)
    : alg_(alg), rep_(rep), T_(T), wg_(alg.dim())
{
    sub_ = sub_adjacent_lya(alg, rep, T);
    induced_ = induced_representation(alg, rep, T);
}

Matrix RBComplex::delta0(const Vector& x) const
{
    const std::size_t n = alg_.dim(), m = rep_.m;
    if (x.size() != wg_.size()) throw DimensionMismatch("wedge element has the wrong number of coordinates");
    Matrix r(n, m);
    for (std::size_t k = 0; k < wg_.size(); ++k) {
        if (sgn(x[k]) == 0) continue;
        auto [a, b] = wg_.pair(k);
        Vector ea = unit(n, a), eb = unit(n, b);
        Matrix D = compute_D(alg_, rep_, ea, eb);
        for (std::size_t v = 0; v < m; ++v) {
            Vector col = sub(T_.apply(D.apply(unit(m, v))), alg_.ternary(ea, eb, T_.column(v)));
            for (std::size_t i = 0; i < n; ++i) r(i, v) += x[k] * col[i];
        }
    }
    return r;
}

Cochain RBComplex::coboundary(const Cochain& f) const
{
    if (f.arg_dim() != rep_.m || f.val_dim() != alg_.dim())
        throw DimensionMismatch("cochain does not take arguments in V and values in g");
    return yamaguti_coboundary(sub_, induced_, f);
}

namespace {

// The sub-adjacent structure and the induced representation, evaluated on
// the fly from T, rho, mu and the brackets of g.
struct Expanded {
    const LYAlgebra& alg;
    const Representation& rep;
    const Matrix& T;
    std::size_t n, m;
    WedgeBasis wv;

    Vector bracket(const Vector& u, const Vector& v) const
    {
        return sub(rep.rho_of(T.apply(u)).apply(v), rep.rho_of(T.apply(v)).apply(u));
    }
    Vector ternary(const Vector& u, const Vector& v, const Vector& w) const
    {
        Vector Tu = T.apply(u), Tv = T.apply(v), Tw = T.apply(w);
        Vector r = compute_D(alg, rep, Tu, Tv).apply(w);
        r = add(r, rep.mu_of(Tv, Tw).apply(u));
        return sub(r, rep.mu_of(Tu, Tw).apply(v));
    }
    Vector rho(const Vector& u, const Vector& x) const
    {
        return add(alg.binary(T.apply(u), x), T.apply(rep.rho_of(x).apply(u)));
    }
    Vector mu(const Vector& u, const Vector& v, const Vector& x) const
    {
        Vector Tu = T.apply(u), Tv = T.apply(v);
        Vector inner = sub(compute_D(alg, rep, x, Tu).apply(v), rep.mu_of(x, Tv).apply(u));
        return sub(alg.ternary(x, Tu, Tv), T.apply(inner));
    }
    Vector D(const Vector& u, const Vector& v, const Vector& x) const
    {
        Vector Tu = T.apply(u), Tv = T.apply(v);
        Vector inner = sub(rep.mu_of(Tv, x).apply(u), rep.mu_of(Tu, x).apply(v));
        return sub(alg.ternary(Tu, Tv, x), T.apply(inner));
    }
};

// F evaluated on dense wedge vectors (and an input vector for the g part).
Vector eval_dense(const Cochain& F, const std::vector<Vector>& ws, const Vector* x)
{
    const std::size_t W = F.wedge_dim();
    Vector out(F.val_dim());
    std::vector<std::vector<std::size_t>> nz(ws.size());
    for (std::size_t i = 0; i < ws.size(); ++i) {
        for (std::size_t c = 0; c < W; ++c)
            if (sgn(ws[i][c]) != 0) nz[i].push_back(c);
        if (nz[i].empty()) return out;
    }
    std::vector<std::size_t> pos(ws.size(), 0);
    while (true) {
        std::size_t t = 0;
        Scalar c = 1;
        for (std::size_t i = 0; i < ws.size(); ++i) {
            t = t * W + nz[i][pos[i]];
            c *= ws[i][nz[i][pos[i]]];
        }
        for (std::size_t o = 0; o < F.val_dim(); ++o) {
            if (x == nullptr) {
                out[o] += c * F.f_at(t, o);
            } else {
                for (std::size_t in = 0; in < F.arg_dim(); ++in)
                    if (sgn((*x)[in]) != 0) out[o] += c * (*x)[in] * F.g_at(t, in, o);
            }
        }
        std::size_t i = ws.size();
        bool done = true;
        while (i > 0) {
            --i;
            if (++pos[i] < nz[i].size()) {
                done = false;
                break;
            }
            pos[i] = 0;
        }
        if (done) return out;
    }
}

void accumulate(Vector& acc, int sign, const Vector& v)
{
    if (sign > 0)
        acc = add(acc, v);
    else
        acc = sub(acc, v);
}

}  // namespace

Cochain RBComplex::coboundary_explicit(const Cochain& F) const
{
    const std::size_t n = alg_.dim(), m = rep_.m;
    if (F.arg_dim() != m || F.val_dim() != n)
        throw DimensionMismatch("cochain does not take arguments in V and values in g");
    Expanded E{alg_, rep_, T_, n, m, WedgeBasis(m)};
    const std::size_t W = E.wv.size();
    const int p = F.degree();
    Cochain R(p + 1, m, n);

    if (p == 0) {
        Matrix f = F.to_matrix();
        for (std::size_t k = 0; k < W; ++k) {
            auto [a, b] = E.wv.pair(k);
            Vector u = unit(m, a), v = unit(m, b);
            Vector fu = f.column(a), fv = f.column(b);
            Vector r = sub(E.rho(u, fv), E.rho(v, fu));
            r = sub(r, f.apply(E.bracket(u, v)));
            for (std::size_t o = 0; o < n; ++o) R.f_at(k, o) = r[o];
            for (std::size_t c = 0; c < m; ++c) {
                Vector w = unit(m, c);
                Vector s = E.D(u, v, f.column(c));
                s = add(s, E.mu(v, w, fu));
                s = sub(s, E.mu(u, w, fv));
                s = sub(s, f.apply(E.ternary(u, v, w)));
                for (std::size_t o = 0; o < n; ++o) R.g_at(k, c, o) = s[o];
            }
        }
        return R;
    }

    const std::size_t len = static_cast<std::size_t>(p) + 1;
    const int sp = p % 2 ? -1 : 1;
    std::vector<std::size_t> b(len);
    for (std::size_t t = 0; t < R.tuples(); ++t) {
        for (std::size_t i = len, r = t; i-- > 0;) {
            b[i] = r % W;
            r /= W;
        }
        std::vector<Vector> all(len);
        std::vector<Vector> xs(len), ys(len);
        for (std::size_t i = 0; i < len; ++i) {
            all[i] = unit(W, b[i]);
            xs[i] = unit(m, E.wv.pair(b[i]).first);
            ys[i] = unit(m, E.wv.pair(b[i]).second);
        }
        std::vector<Vector> first(all.begin(), all.end() - 1);
        const Vector& xl = xs[len - 1];
        const Vector& yl = ys[len - 1];
        Vector gx = eval_dense(F, first, &xl), gy = eval_dense(F, first, &yl);

        auto drop = [&](std::size_t k) {
            std::vector<Vector> r = all;
            r.erase(r.begin() + static_cast<std::ptrdiff_t>(k));
            return r;
        };
        auto merged = [&](std::size_t k, std::size_t l) {
            std::vector<Vector> r = all;
            r[l] = add(E.wv.wedge(E.ternary(xs[k], ys[k], xs[l]), ys[l]),
                       E.wv.wedge(xs[l], E.ternary(xs[k], ys[k], ys[l])));
            r.erase(r.begin() + static_cast<std::ptrdiff_t>(k));
            return r;
        };

        Vector a = sub(E.rho(xl, gy), E.rho(yl, gx));
        Vector br = E.bracket(xl, yl);
        a = sub(a, eval_dense(F, first, &br));
        if (sp < 0) a = scale(Scalar(-1), a);
        for (std::size_t k = 0; k + 1 < len; ++k)
            accumulate(a, k % 2 ? -1 : 1, E.D(xs[k], ys[k], eval_dense(F, drop(k), nullptr)));
        for (std::size_t k = 0; k < len; ++k)
            for (std::size_t l = k + 1; l < len; ++l)
                accumulate(a, k % 2 ? 1 : -1, eval_dense(F, merged(k, l), nullptr));
        for (std::size_t o = 0; o < n; ++o) R.f_at(t, o) = a[o];

        for (std::size_t c = 0; c < m; ++c) {
            Vector z = unit(m, c);
            Vector s = sub(E.mu(yl, z, gx), E.mu(xl, z, gy));
            if (sp < 0) s = scale(Scalar(-1), s);
            for (std::size_t k = 0; k < len; ++k) {
                accumulate(s, k % 2 ? -1 : 1, E.D(xs[k], ys[k], eval_dense(F, drop(k), &z)));
                Vector tz = E.ternary(xs[k], ys[k], z);
                accumulate(s, k % 2 ? 1 : -1, eval_dense(F, drop(k), &tz));
            }
            for (std::size_t k = 0; k < len; ++k)
                for (std::size_t l = k + 1; l < len; ++l)
                    accumulate(s, k % 2 ? 1 : -1, eval_dense(F, merged(k, l), &z));
            for (std::size_t o = 0; o < n; ++o) R.g_at(t, c, o) = s[o];
        }
    }
    return R;
}

std::size_t RBComplex::level_dim(int level) const
{
    if (level < 0) throw DimensionMismatch("negative level");
    if (level == 0) return wg_.size();
    return cochain_size(level_to_degree(level), rep_.m, alg_.dim());
}

namespace {

SparseMatrix level0_matrix(const RBComplex& cx, bool parallel)
{
    const std::size_t rows = cx.level_dim(1), cols = cx.level_dim(0);
    auto column = [&](std::size_t j) { return Cochain::from_matrix(cx.delta0(unit(cols, j))).coords(); };
    return parallel ? assemble_columns(rows, cols, column) : assemble_columns_serial(rows, cols, column);
}

void check_level(int level)
{
    if (level < 0) throw DimensionMismatch("negative level");
    if (level > max_level())
        throw ResourceCapExceeded("level " + std::to_string(level) + " exceeds the level cap " +
                                  std::to_string(max_level()) + " (raise with --max-level)");
}

}  // namespace

SparseMatrix RBComplex::matrix(int level) const
{
    check_level(level);
    if (level == 0) return level0_matrix(*this, true);
    return yamaguti_matrix(sub_, induced_, level);
}

SparseMatrix RBComplex::matrix_serial(int level) const
{
    check_level(level);
    if (level == 0) return level0_matrix(*this, false);
    return yamaguti_matrix_serial(sub_, induced_, level);
}

CohomologyDims RBComplex::dims(int level) const
{
    if (level < 1) throw DimensionMismatch("cohomology of the complex starts at level 1");
    check_level(level);
    CohomologyDims r;
    r.level = level;
    r.dim_c = level_dim(level);
    r.rank_out = rank(matrix(level));
    r.dim_z = r.dim_c - r.rank_out;
    r.dim_b = rank(matrix(level - 1));
    r.dim_h = r.dim_z - r.dim_b;
    return r;
}

std::size_t RBComplex::level0_kernel() const { return level_dim(0) - rank(matrix(0)); }

bool RBComplex::is_cocycle(const Cochain& f) const { return coboundary(f).is_zero(); }

SolveResult RBComplex::coboundary_solve(const Cochain& g) const
{
    const int level = degree_to_level(g.degree());
    if (g.arg_dim() != rep_.m || g.val_dim() != alg_.dim())
        throw DimensionMismatch("cochain does not take arguments in V and values in g");
    return solve(matrix(level - 1), g.coords());
}

Report theorem_diff_oracle(const RBComplex& cx, const TwistedLInfinity& tw, const Cochain& f)
{
    const int n = f.degree();
    Cochain lhs = cx.coboundary(f);
    Cochain l1 = tw.l1(f);
    const int stated = n % 2 ? -1 : 1;  // (-1)^{level-1}, level = degree + 1
    Report r;
    r.subject = "coboundary_vs_l1";
    Check& c = r.add("stated_sign");
    Check& plus = r.add("equals_plus_l1");
    Check& minus = r.add("equals_minus_l1");
    plus.advisory = minus.advisory = true;
    Cochain dp = lhs - l1, dm = lhs + l1;
    const Cochain& ds = stated > 0 ? dp : dm;
    for (std::size_t k = 0; k < lhs.size(); ++k) {
        if (sgn(ds.coord(k)) != 0) c.fail({k}, {ds.coord(k)});
        if (sgn(dp.coord(k)) != 0) plus.fail({k}, {dp.coord(k)});
        if (sgn(dm.coord(k)) != 0) minus.fail({k}, {dm.coord(k)});
    }
    c.note = "level " + std::to_string(degree_to_level(n)) + ", expected sign " + (stated > 0 ? "+" : "-");
    return r;
}

}  // namespace lya
