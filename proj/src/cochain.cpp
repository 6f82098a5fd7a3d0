#include "lya/cochain.hpp"

#include "lya/errors.hpp"
#include "lya/limits.hpp"

#include <algorithm>
#include <exception>
#include <string>

namespace lya {

WedgeBasis::WedgeBasis(std::size_t n) : n_(n), idx_(n * n, 0)
{
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            idx_[i * n + j] = pairs_.size();
            pairs_.emplace_back(i, j);
        }
}

Vector WedgeBasis::wedge(const Vector& u, const Vector& v) const
{
    Vector w(pairs_.size());
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
        auto [i, j] = pairs_[k];
        w[k] = u[i] * v[j] - u[j] * v[i];
    }
    return w;
}

std::vector<Shuffle> shuffles(std::size_t i, std::size_t n)
{
    std::vector<Shuffle> out;
    if (i > n) return out;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(i), true);
    // prev_permutation on a sorted-descending mask enumerates subsets lexicographically.
    do {
        Shuffle s;
        for (std::size_t k = 0; k < n; ++k) (pick[k] ? s.first : s.second).push_back(k);
        std::size_t inv = 0;
        for (std::size_t a : s.first)
            for (std::size_t b : s.second)
                if (a > b) ++inv;
        s.sign = inv % 2 ? -1 : 1;
        out.push_back(std::move(s));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

namespace {

std::size_t ipow(std::size_t b, int e)
{
    std::size_t r = 1;
    for (int k = 0; k < e; ++k) r *= b;
    return r;
}

}  // namespace

std::size_t cochain_size(int degree, std::size_t arg_dim, std::size_t val_dim)
{
    std::size_t t = ipow(arg_dim * (arg_dim - (arg_dim ? 1 : 0)) / 2, degree);
    return (degree >= 1 ? t * val_dim : 0) + t * arg_dim * val_dim;
}

Cochain::Cochain(int degree, std::size_t arg_dim, std::size_t val_dim)
    : degree_(degree), arg_(arg_dim), val_(val_dim)
{
    if (degree < 0) throw DimensionMismatch("cochain degree must be nonnegative");
    w_ = arg_dim * (arg_dim ? arg_dim - 1 : 0) / 2;
    tuples_ = ipow(w_, degree);
    check_tensor_size(cochain_size(degree, arg_dim, val_dim), "cochain");
    if (degree >= 1) f_.assign(tuples_ * val_, Scalar(0));
    g_.assign(tuples_ * arg_ * val_, Scalar(0));
}

Cochain Cochain::from_matrix(const Matrix& a)
{
    Cochain c(0, a.cols(), a.rows());
    for (std::size_t in = 0; in < a.cols(); ++in)
        for (std::size_t out = 0; out < a.rows(); ++out) c.g_at(0, in, out) = a(out, in);
    return c;
}

Matrix Cochain::to_matrix() const
{
    if (degree_ != 0) throw DimensionMismatch("only degree-0 cochains are linear maps");
    Matrix a(val_, arg_);
    for (std::size_t in = 0; in < arg_; ++in)
        for (std::size_t out = 0; out < val_; ++out) a(out, in) = g_at(0, in, out);
    return a;
}

Vector Cochain::coords() const
{
    Vector v;
    v.reserve(size());
    v.insert(v.end(), f_.begin(), f_.end());
    v.insert(v.end(), g_.begin(), g_.end());
    return v;
}

Cochain Cochain::from_coords(int degree, std::size_t arg_dim, std::size_t val_dim, const Vector& v)
{
    Cochain c(degree, arg_dim, val_dim);
    if (v.size() != c.size()) throw DimensionMismatch("coordinate vector has the wrong length");
    for (std::size_t k = 0; k < v.size(); ++k) c.coord(k) = v[k];
    return c;
}

bool Cochain::is_zero() const { return lya::is_zero(f_) && lya::is_zero(g_); }

bool Cochain::same_shape(const Cochain& o) const
{
    return degree_ == o.degree_ && arg_ == o.arg_ && val_ == o.val_;
}

Cochain& Cochain::operator+=(const Cochain& o)
{
    if (!same_shape(o)) throw DimensionMismatch("cochain shapes differ");
    for (std::size_t k = 0; k < f_.size(); ++k) f_[k] += o.f_[k];
    for (std::size_t k = 0; k < g_.size(); ++k) g_[k] += o.g_[k];
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& o)
{
    if (!same_shape(o)) throw DimensionMismatch("cochain shapes differ");
    for (std::size_t k = 0; k < f_.size(); ++k) f_[k] -= o.f_[k];
    for (std::size_t k = 0; k < g_.size(); ++k) g_[k] -= o.g_[k];
    return *this;
}

Cochain Cochain::operator+(const Cochain& o) const
{
    Cochain r = *this;
    r += o;
    return r;
}

Cochain Cochain::operator-(const Cochain& o) const
{
    Cochain r = *this;
    r -= o;
    return r;
}

Cochain Cochain::scaled(const Scalar& s) const
{
    Cochain r = *this;
    for (auto& x : r.f_) x *= s;
    for (auto& x : r.g_) x *= s;
    return r;
}

namespace {

// Shared setup for one circle product.
struct CircleKernel {
    const Cochain& P;
    const Cochain& Q;
    int p, q, N;
    std::size_t n, W;
    WedgeBasis wb;
    int sign_pq;
    std::vector<Shuffle> outer;               // (p, N)-shuffles
    std::vector<std::vector<Shuffle>> inner;  // inner[k-1]: (k-1, k-1+q)-shuffles

    CircleKernel(const Cochain& P_, const Cochain& Q_)
        : P(P_), Q(Q_), p(P_.degree()), q(Q_.degree()), N(p + q), n(P_.arg_dim()), W(P_.wedge_dim()), wb(n)
    {
        if (P.arg_dim() != P.val_dim() || Q.arg_dim() != Q.val_dim() || P.arg_dim() != Q.arg_dim())
            throw DimensionMismatch("circle product needs cochains on one common space");
        sign_pq = (p * q) % 2 ? -1 : 1;
        outer = shuffles(static_cast<std::size_t>(p), static_cast<std::size_t>(N));
        for (int k = 1; k <= p; ++k)
            inner.push_back(shuffles(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(k - 1 + q)));
    }

    std::size_t flat(const std::vector<std::size_t>& b, const std::vector<std::size_t>& pos) const
    {
        std::size_t t = 0;
        for (std::size_t i : pos) t = t * W + b[i];
        return t;
    }

    std::size_t flat_range(const std::vector<std::size_t>& b, std::size_t lo, std::size_t hi) const
    {
        std::size_t t = 0;
        for (std::size_t i = lo; i < hi; ++i) t = t * W + b[i];
        return t;
    }

    // Writes every entry of R indexed by output tuple t.
    void entry(Cochain& R, std::size_t t) const
    {
        Vector accf(n);
        std::vector<Vector> accg(n, Vector(n));
        eval(t, accf, accg);
        if (N >= 1)
            for (std::size_t out = 0; out < n; ++out) R.f_at(t, out) = std::move(accf[out]);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t out = 0; out < n; ++out) R.g_at(t, x, out) = std::move(accg[x][out]);
    }

    // Adds the output tuple t of P o Q to accf (used when N >= 1) and accg.
    void eval(std::size_t t, Vector& accf, std::vector<Vector>& accg) const
    {
        std::vector<std::size_t> b(static_cast<std::size_t>(N));
        for (std::size_t i = b.size(), r = t; i-- > 0;) {
            b[i] = r % W;
            r /= W;
        }
        const bool has_f = N >= 1;

        // P_II(X_first, Q(X_second, ...)) over (p,q)-shuffles.
        for (const Shuffle& s : outer) {
            const int sg = sign_pq * s.sign;
            const std::size_t tf = flat(b, s.first), ts = flat(b, s.second);
            if (has_f && q >= 1 && s.second.back() == static_cast<std::size_t>(N - 1)) {
                for (std::size_t in = 0; in < n; ++in) {
                    const Scalar& qv = Q.f_at(ts, in);
                    if (sgn(qv) == 0) continue;
                    for (std::size_t out = 0; out < n; ++out) {
                        const Scalar& pv = P.g_at(tf, in, out);
                        if (sgn(pv) == 0) continue;
                        if (sg > 0)
                            accf[out] += qv * pv;
                        else
                            accf[out] -= qv * pv;
                    }
                }
            }
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t in = 0; in < n; ++in) {
                    const Scalar& qv = Q.g_at(ts, x, in);
                    if (sgn(qv) == 0) continue;
                    for (std::size_t out = 0; out < n; ++out) {
                        const Scalar& pv = P.g_at(tf, in, out);
                        if (sgn(pv) == 0) continue;
                        if (sg > 0)
                            accg[x][out] += qv * pv;
                        else
                            accg[x][out] -= qv * pv;
                    }
                }
        }

        // P(X_first, x_t ^ Q_II(X_second, y_t) + Q_II(X_second, x_t) ^ y_t, X_rest).
        Vector w(W);
        for (int k = 1; k <= p; ++k) {
            const int sk = ((k - 1) * q) % 2 ? -1 : 1;
            const std::size_t m = static_cast<std::size_t>(k - 1 + q);
            const auto [xt, yt] = wb.pair(b[m]);
            const std::size_t rest_len = static_cast<std::size_t>(N) - m - 1;
            const std::size_t trest = flat_range(b, m + 1, static_cast<std::size_t>(N));
            const std::size_t wrest = ipow(W, static_cast<int>(rest_len));
            for (const Shuffle& s : inner[static_cast<std::size_t>(k - 1)]) {
                const int sg = sk * s.sign;
                const std::size_t th = flat(b, s.first), ts = flat(b, s.second);
                std::fill(w.begin(), w.end(), Scalar(0));
                bool any = false;
                for (std::size_t j = 0; j < n; ++j) {
                    // x_t ^ Q(.., y_t): coefficient of e_xt ^ e_j
                    const Scalar& a = Q.g_at(ts, yt, j);
                    if (sgn(a) != 0 && j != xt) {
                        any = true;
                        if (xt < j)
                            w[wb.index(xt, j)] += a;
                        else
                            w[wb.index(j, xt)] -= a;
                    }
                    // Q(.., x_t) ^ y_t: coefficient of e_j ^ e_yt
                    const Scalar& c = Q.g_at(ts, xt, j);
                    if (sgn(c) != 0 && j != yt) {
                        any = true;
                        if (j < yt)
                            w[wb.index(j, yt)] += c;
                        else
                            w[wb.index(yt, j)] -= c;
                    }
                }
                if (!any) continue;
                for (std::size_t c = 0; c < W; ++c) {
                    if (sgn(w[c]) == 0) continue;
                    const Scalar coef = sg > 0 ? w[c] : Scalar(-w[c]);
                    const std::size_t tp = (th * W + c) * wrest + trest;
                    if (has_f)
                        for (std::size_t out = 0; out < n; ++out) {
                            const Scalar& pv = P.f_at(tp, out);
                            if (sgn(pv) != 0) accf[out] += coef * pv;
                        }
                    for (std::size_t x = 0; x < n; ++x)
                        for (std::size_t out = 0; out < n; ++out) {
                            const Scalar& pv = P.g_at(tp, x, out);
                            if (sgn(pv) != 0) accg[x][out] += coef * pv;
                        }
                }
            }
        }

    }
};

}  // namespace

Cochain circle(const Cochain& P, const Cochain& Q)
{
    CircleKernel k(P, Q);
    Cochain R(k.N, k.n, k.n);
    const long T = static_cast<long>(R.tuples());
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 4)
    for (long t = 0; t < T; ++t) {
        try {
            k.entry(R, static_cast<std::size_t>(t));
        } catch (...) {
#pragma omp critical(lya_circle_error)
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return R;
}

Cochain circle_serial(const Cochain& P, const Cochain& Q)
{
    CircleKernel k(P, Q);
    Cochain R(k.N, k.n, k.n);
    for (std::size_t t = 0; t < R.tuples(); ++t) k.entry(R, t);
    return R;
}

std::vector<TupleValue> graded_bracket_at(const Cochain& P, const Cochain& Q, const std::vector<std::size_t>& tuples)
{
    CircleKernel pq(P, Q), qp(Q, P);
    const std::size_t n = pq.n;
    const std::size_t total = ipow(pq.W, pq.N);
    const bool odd = (P.degree() * Q.degree()) % 2;
    std::vector<TupleValue> out(tuples.size());
    std::exception_ptr err;
    const long T = static_cast<long>(tuples.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (long r = 0; r < T; ++r) {
        try {
            const std::size_t t = tuples[static_cast<std::size_t>(r)];
            if (t >= total) throw DimensionMismatch("tuple index out of range");
            Vector f(n), fs(n);
            std::vector<Vector> g(n, Vector(n)), gs(n, Vector(n));
            pq.eval(t, f, g);
            qp.eval(t, fs, gs);
            TupleValue& v = out[static_cast<std::size_t>(r)];
            if (pq.N >= 1) {
                for (std::size_t o = 0; o < n; ++o) if (odd) f[o] += fs[o]; else f[o] -= fs[o];
                v.f = std::move(f);
            }
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t o = 0; o < n; ++o) if (odd) g[x][o] += gs[x][o]; else g[x][o] -= gs[x][o];
            v.g = std::move(g);
        } catch (...) {
#pragma omp critical(lya_bracket_at_error)
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return out;
}

Cochain graded_bracket(const Cochain& P, const Cochain& Q)
{
    Cochain r = circle(P, Q);
    Cochain s = circle(Q, P);
    if ((P.degree() * Q.degree()) % 2)
        r += s;
    else
        r -= s;
    return r;
}

Cochain algebra_to_pi(const LYAlgebra& alg)
{
    const std::size_t n = alg.dim();
    Cochain pi(1, n, n);
    WedgeBasis wb(n);
    for (std::size_t k = 0; k < wb.size(); ++k) {
        auto [i, j] = wb.pair(k);
        for (std::size_t out = 0; out < n; ++out) {
            pi.f_at(k, out) = alg.c(i, j, out);
            for (std::size_t z = 0; z < n; ++z) pi.g_at(k, z, out) = alg.d(i, j, z, out);
        }
    }
    return pi;
}

LYAlgebra pi_to_algebra(const Cochain& pi)
{
    if (pi.degree() != 1 || pi.arg_dim() != pi.val_dim()) throw DimensionMismatch("need a degree-1 cochain on one space");
    const std::size_t n = pi.arg_dim();
    LYAlgebra alg(n);
    WedgeBasis wb(n);
    for (std::size_t k = 0; k < wb.size(); ++k) {
        auto [i, j] = wb.pair(k);
        Vector b(n);
        for (std::size_t out = 0; out < n; ++out) b[out] = pi.f_at(k, out);
        alg.set_binary(i, j, b);
        for (std::size_t z = 0; z < n; ++z) {
            Vector t(n);
            for (std::size_t out = 0; out < n; ++out) t[out] = pi.g_at(k, z, out);
            alg.set_ternary(i, j, z, t);
        }
    }
    return alg;
}

Report is_mc_element(const Cochain& pi)
{
    if (pi.degree() != 1) throw DimensionMismatch("Maurer-Cartan check needs a degree-1 cochain");
    Report r;
    r.subject = "maurer_cartan";
    Check& c = r.add("bracket_vanishes");
    Cochain b = graded_bracket(pi, pi);
    for (std::size_t k = 0; k < b.size(); ++k)
        if (sgn(b.coord(k)) != 0) c.fail({k}, {b.coord(k)});
    r.notes.push_back(
        "[Pi,Pi] = 0 certifies only the ternary-derivation and fundamental identities, not a Lie-Yamaguti algebra");
    return r;
}

Cochain differential_dPi(const Cochain& pi, const Cochain& f)
{
    if (!is_mc_element(pi).passed()) throw NotMaurerCartan("Pi is not a Maurer-Cartan element");
    return graded_bracket(pi, f);
}

Scalar random_scalar(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 2);
    Scalar s(num(rng), den(rng));
    s.canonicalize();
    return s;
}

Cochain random_cochain(std::mt19937_64& rng, int degree, std::size_t arg_dim, std::size_t val_dim)
{
    Cochain c(degree, arg_dim, val_dim);
    for (std::size_t k = 0; k < c.size(); ++k) c.coord(k) = random_scalar(rng);
    return c;
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols)
{
    Matrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a(i, j) = random_scalar(rng);
    return a;
}

}  // namespace lya
