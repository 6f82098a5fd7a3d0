#include "lya/yamaguti.hpp"

#include "lya/errors.hpp"
#include "lya/limits.hpp"

#include <string>

namespace lya {

namespace {

using Slot = std::vector<std::pair<std::size_t, Scalar>>;

Slot basis_slot(std::size_t k) { return Slot{{k, Scalar(1)}}; }

// Everything the coboundary needs, evaluated on basis elements once.
struct YamagutiTables {
    std::size_t n, m, W;
    WedgeBasis wb;
    std::vector<Matrix> D;           // D(x_k, y_k) for each wedge basis element
    std::vector<Vector> br;          // [x_k, y_k]
    std::vector<Vector> tern;        // [[x_k, y_k, e_z]] at k*n+z
    std::vector<Slot> circ;          // X_k o X_l at k*W+l
    const Representation& rep;

    YamagutiTables(const LYAlgebra& alg, const Representation& r)
        : n(alg.dim()), m(r.m), W(n * (n ? n - 1 : 0) / 2), wb(n), rep(r)
    {
        if (r.n != n) throw DimensionMismatch("representation does not match the algebra");
        for (std::size_t k = 0; k < W; ++k) {
            auto [x, y] = wb.pair(k);
            D.push_back(compute_D(alg, r, unit(n, x), unit(n, y)));
            br.push_back(alg.binary_basis(x, y));
            for (std::size_t z = 0; z < n; ++z) tern.push_back(alg.ternary_basis(x, y, z));
        }
        for (std::size_t k = 0; k < W; ++k)
            for (std::size_t l = 0; l < W; ++l) {
                auto [xl, yl] = wb.pair(l);
                Vector w = add(wb.wedge(tern[k * n + xl], unit(n, yl)), wb.wedge(unit(n, xl), tern[k * n + yl]));
                Slot s;
                for (std::size_t c = 0; c < W; ++c)
                    if (sgn(w[c]) != 0) s.emplace_back(c, w[c]);
                circ.push_back(std::move(s));
            }
    }
};

// f(slots...) for a V-valued cochain, multilinear in the slots.
void add_f(const Cochain& F, const std::vector<Slot>& slots, const Scalar& coef, Vector& out)
{
    const std::size_t W = F.wedge_dim();
    std::vector<std::size_t> pos(slots.size(), 0);
    for (const auto& s : slots)
        if (s.empty()) return;
    while (true) {
        std::size_t t = 0;
        Scalar c = coef;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            t = t * W + slots[i][pos[i]].first;
            c *= slots[i][pos[i]].second;
        }
        for (std::size_t o = 0; o < F.val_dim(); ++o) {
            const Scalar& v = F.f_at(t, o);
            if (sgn(v) != 0) out[o] += c * v;
        }
        std::size_t i = slots.size();
        while (i > 0) {
            --i;
            if (++pos[i] < slots[i].size()) break;
            pos[i] = 0;
            if (i == 0) return;
        }
        if (slots.empty()) return;
    }
}

void add_g(const Cochain& F, const std::vector<Slot>& slots, const Vector& x, const Scalar& coef, Vector& out)
{
    const std::size_t W = F.wedge_dim();
    for (const auto& s : slots)
        if (s.empty()) return;
    std::vector<std::size_t> pos(slots.size(), 0);
    while (true) {
        std::size_t t = 0;
        Scalar c = coef;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            t = t * W + slots[i][pos[i]].first;
            c *= slots[i][pos[i]].second;
        }
        for (std::size_t in = 0; in < F.arg_dim(); ++in) {
            if (sgn(x[in]) == 0) continue;
            Scalar ci = c * x[in];
            for (std::size_t o = 0; o < F.val_dim(); ++o) {
                const Scalar& v = F.g_at(t, in, o);
                if (sgn(v) != 0) out[o] += ci * v;
            }
        }
        std::size_t i = slots.size();
        bool done = slots.empty();
        while (!done && i > 0) {
            --i;
            if (++pos[i] < slots[i].size()) break;
            pos[i] = 0;
            if (i == 0) done = true;
        }
        if (done) return;
    }
}

Vector g_of(const Cochain& F, const std::vector<Slot>& slots, const Vector& x)
{
    Vector r(F.val_dim());
    add_g(F, slots, x, Scalar(1), r);
    return r;
}

Vector f_of(const Cochain& F, const std::vector<Slot>& slots)
{
    Vector r(F.val_dim());
    add_f(F, slots, Scalar(1), r);
    return r;
}

void add_to(Vector& acc, int sign, const Vector& v)
{
    for (std::size_t i = 0; i < acc.size(); ++i) {
        if (sgn(v[i]) == 0) continue;
        if (sign > 0)
            acc[i] += v[i];
        else
            acc[i] -= v[i];
    }
}

Cochain coboundary_degree0(const YamagutiTables& T, const Cochain& F)
{
    const std::size_t n = T.n;
    Cochain R(1, n, T.m);
    Matrix f = F.to_matrix();
    for (std::size_t k = 0; k < T.W; ++k) {
        auto [x, y] = T.wb.pair(k);
        Vector fx = f.column(x), fy = f.column(y);
        Vector a = sub(T.rep.rho[x].apply(fy), T.rep.rho[y].apply(fx));
        a = sub(a, f.apply(T.br[k]));
        for (std::size_t o = 0; o < T.m; ++o) R.f_at(k, o) = a[o];
        for (std::size_t z = 0; z < n; ++z) {
            Vector b = T.D[k].apply(f.column(z));
            b = add(b, T.rep.mu_basis(y, z).apply(fx));
            b = sub(b, T.rep.mu_basis(x, z).apply(fy));
            b = sub(b, f.apply(T.tern[k * n + z]));
            for (std::size_t o = 0; o < T.m; ++o) R.g_at(k, z, o) = b[o];
        }
    }
    return R;
}

Cochain coboundary_positive(const YamagutiTables& T, const Cochain& F)
{
    const std::size_t n = T.n, W = T.W;
    const int p = F.degree();
    Cochain R(p + 1, n, T.m);
    const std::size_t len = static_cast<std::size_t>(p) + 1;
    const int sp = p % 2 ? -1 : 1;
    std::vector<std::size_t> b(len);
    for (std::size_t t = 0; t < R.tuples(); ++t) {
        for (std::size_t i = len, r = t; i-- > 0;) {
            b[i] = r % W;
            r /= W;
        }
        std::vector<Slot> all(len);
        for (std::size_t i = 0; i < len; ++i) all[i] = basis_slot(b[i]);
        std::vector<Slot> first(all.begin(), all.end() - 1);
        auto [xl, yl] = T.wb.pair(b[len - 1]);
        Vector gx = g_of(F, first, unit(n, xl));
        Vector gy = g_of(F, first, unit(n, yl));

        std::vector<std::vector<Slot>> drop(len);
        for (std::size_t k = 0; k < len; ++k) {
            drop[k] = all;
            drop[k].erase(drop[k].begin() + static_cast<std::ptrdiff_t>(k));
        }
        std::vector<std::vector<Slot>> merged;
        std::vector<int> merged_sign;
        for (std::size_t k = 0; k < len; ++k)
            for (std::size_t l = k + 1; l < len; ++l) {
                std::vector<Slot> args = all;
                args[l] = T.circ[b[k] * W + b[l]];
                args.erase(args.begin() + static_cast<std::ptrdiff_t>(k));
                merged.push_back(std::move(args));
                merged_sign.push_back(k % 2 ? 1 : -1);
            }

        // f part
        Vector a = sub(T.rep.rho[xl].apply(gy), T.rep.rho[yl].apply(gx));
        a = sub(a, g_of(F, first, T.br[b[len - 1]]));
        if (sp < 0) a = scale(Scalar(-1), a);
        for (std::size_t k = 0; k + 1 < len; ++k) add_to(a, k % 2 ? -1 : 1, T.D[b[k]].apply(f_of(F, drop[k])));
        for (std::size_t i = 0; i < merged.size(); ++i) add_to(a, merged_sign[i], f_of(F, merged[i]));
        for (std::size_t o = 0; o < T.m; ++o) R.f_at(t, o) = a[o];

        // g part
        for (std::size_t z = 0; z < n; ++z) {
            Vector ez = unit(n, z);
            Vector c = sub(T.rep.mu_basis(yl, z).apply(gx), T.rep.mu_basis(xl, z).apply(gy));
            if (sp < 0) c = scale(Scalar(-1), c);
            for (std::size_t k = 0; k < len; ++k) {
                add_to(c, k % 2 ? -1 : 1, T.D[b[k]].apply(g_of(F, drop[k], ez)));
                add_to(c, k % 2 ? 1 : -1, g_of(F, drop[k], T.tern[b[k] * n + z]));
            }
            for (std::size_t i = 0; i < merged.size(); ++i) add_to(c, merged_sign[i], g_of(F, merged[i], ez));
            for (std::size_t o = 0; o < T.m; ++o) R.g_at(t, z, o) = c[o];
        }
    }
    return R;
}

}  // namespace

Cochain yamaguti_coboundary(const LYAlgebra& alg, const Representation& rep, const Cochain& f)
{
    if (f.arg_dim() != alg.dim() || f.val_dim() != rep.m)
        throw DimensionMismatch("cochain does not take arguments in g and values in V");
    YamagutiTables T(alg, rep);
    return f.degree() == 0 ? coboundary_degree0(T, f) : coboundary_positive(T, f);
}

namespace {

SparseMatrix build_matrix(const LYAlgebra& alg, const Representation& rep, int level, bool parallel)
{
    if (level < 1) throw DimensionMismatch("Yamaguti cochains start at level 1");
    const int d = level_to_degree(level);
    const std::size_t n = alg.dim(), m = rep.m;
    const std::size_t cols = cochain_size(d, n, m), rows = cochain_size(d + 1, n, m);
    check_tensor_size(rows, "coboundary target");
    YamagutiTables T(alg, rep);
    auto column = [&](std::size_t j) {
        Cochain e(d, n, m);
        e.coord(j) = 1;
        Cochain r = d == 0 ? coboundary_degree0(T, e) : coboundary_positive(T, e);
        return r.coords();
    };
    return parallel ? assemble_columns(rows, cols, column) : assemble_columns_serial(rows, cols, column);
}

}  // namespace

SparseMatrix yamaguti_matrix(const LYAlgebra& alg, const Representation& rep, int level)
{
    return build_matrix(alg, rep, level, true);
}

SparseMatrix yamaguti_matrix_serial(const LYAlgebra& alg, const Representation& rep, int level)
{
    return build_matrix(alg, rep, level, false);
}

CohomologyDims cohomology_dims(const LYAlgebra& alg, const Representation& rep, int level)
{
    if (level < 2) throw DimensionMismatch("Yamaguti cohomology is defined from level 2");
    if (level > max_level())
        throw ResourceCapExceeded("level " + std::to_string(level) + " exceeds the level cap " +
                                  std::to_string(max_level()) + " (raise with --max-level)");
    CohomologyDims r;
    r.level = level;
    r.dim_c = cochain_size(level_to_degree(level), alg.dim(), rep.m);
    r.rank_out = rank(yamaguti_matrix(alg, rep, level));
    r.dim_z = r.dim_c - r.rank_out;
    r.dim_b = rank(yamaguti_matrix(alg, rep, level - 1));
    r.dim_h = r.dim_z - r.dim_b;
    return r;
}

}  // namespace lya
