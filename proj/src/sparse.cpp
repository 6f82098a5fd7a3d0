#include "lya/sparse.hpp"

#include "lya/errors.hpp"

#include <exception>
#include <unordered_map>
#include <utility>

namespace lya {

SparseVector sparsify(const Vector& v)
{
    SparseVector r;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) r.emplace_back(i, v[i]);
    return r;
}

Vector densify(const SparseVector& v, std::size_t n)
{
    Vector r(n);
    for (const auto& [i, x] : v) r[i] = x;
    return r;
}

SparseMatrix SparseMatrix::from_dense(const Matrix& a)
{
    SparseMatrix s;
    s.rows = a.rows();
    s.cols = a.cols();
    s.columns.resize(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) s.columns[j] = sparsify(a.column(j));
    return s;
}

Matrix SparseMatrix::to_dense() const
{
    Matrix a(rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& [i, x] : columns[j]) a(i, j) = x;
    return a;
}

SparseMatrix SparseMatrix::transpose() const
{
    SparseMatrix t;
    t.rows = cols;
    t.cols = rows;
    t.columns.resize(rows);
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& [i, x] : columns[j]) t.columns[i].emplace_back(j, x);
    return t;
}

Vector SparseMatrix::apply(const Vector& x) const
{
    if (x.size() != cols) throw DimensionMismatch("sparse matrix-vector size mismatch");
    Vector r(rows);
    for (std::size_t j = 0; j < cols; ++j) {
        if (sgn(x[j]) == 0) continue;
        for (const auto& [i, a] : columns[j]) r[i] += a * x[j];
    }
    return r;
}

SparseMatrix assemble_columns(std::size_t rows, std::size_t cols,
                              const std::function<Vector(std::size_t)>& column)
{
    SparseMatrix s;
    s.rows = rows;
    s.cols = cols;
    s.columns.resize(cols);
    std::exception_ptr err;
    const long ncols = static_cast<long>(cols);
#pragma omp parallel for schedule(dynamic)
    for (long j = 0; j < ncols; ++j) {
        try {
            s.columns[static_cast<std::size_t>(j)] = sparsify(column(static_cast<std::size_t>(j)));
        } catch (...) {
#pragma omp critical(lya_assemble_error)
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return s;
}

SparseMatrix assemble_columns_serial(std::size_t rows, std::size_t cols,
                                     const std::function<Vector(std::size_t)>& column)
{
    SparseMatrix s;
    s.rows = rows;
    s.cols = cols;
    s.columns.resize(cols);
    for (std::size_t j = 0; j < cols; ++j) s.columns[j] = sparsify(column(j));
    return s;
}

namespace {

using ZVec = std::vector<std::pair<std::size_t, mpz_class>>;
using Combo = std::vector<std::pair<std::size_t, Scalar>>;

// Clears denominators of v; returns z and the rational factor s with z = s v.
ZVec integral(const SparseVector& v, Scalar& s)
{
    mpz_class l = 1;
    for (const auto& [i, x] : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    mpz_class g = 0;
    ZVec z;
    z.reserve(v.size());
    for (const auto& [i, x] : v) {
        mpz_class a = x.get_num() * (l / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        z.emplace_back(i, std::move(a));
    }
    if (g > 1)
        for (auto& e : z) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
    s = Scalar(l);
    if (g > 1) s /= Scalar(g);
    return z;
}

ZVec combine(const mpz_class& a, const ZVec& x, const mpz_class& b, const ZVec& y)
{
    // a*x - b*y
    ZVec r;
    r.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            r.emplace_back(x[i].first, a * x[i].second);
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            r.emplace_back(y[j].first, -b * y[j].second);
            ++j;
        } else {
            mpz_class t = a * x[i].second - b * y[j].second;
            if (t != 0) r.emplace_back(x[i].first, std::move(t));
            ++i;
            ++j;
        }
    }
    return r;
}

Combo combine(const Scalar& a, const Combo& x, const Scalar& b, const Combo& y)
{
    Combo r;
    r.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            r.emplace_back(x[i].first, a * x[i].second);
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            r.emplace_back(y[j].first, -b * y[j].second);
            ++j;
        } else {
            Scalar t = a * x[i].second - b * y[j].second;
            if (sgn(t) != 0) r.emplace_back(x[i].first, std::move(t));
            ++i;
            ++j;
        }
    }
    return r;
}

mpz_class content(const ZVec& z)
{
    mpz_class g = 0;
    for (const auto& e : z) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

// Semi-echelon basis over Z: every stored row has a distinct leading index
// and is primitive. Optionally tracks each row as a rational combination
// of the inserted sources.
class Echelon {
public:
    explicit Echelon(bool track) : track_(track) {}

    std::size_t rank() const { return rows_.size(); }

    // Reduces z (with combination c) until its leading index has no pivot.
    void reduce(ZVec& z, Combo& c) const
    {
        while (!z.empty()) {
            auto it = lead_.find(z.front().first);
            if (it == lead_.end()) return;
            const ZVec& r = rows_[it->second];
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), z.front().second.get_mpz_t(), r.front().second.get_mpz_t());
            mpz_class a = r.front().second / g;
            mpz_class b = z.front().second / g;
            z = combine(a, z, b, r);
            if (track_) c = combine(Scalar(a), c, Scalar(b), combos_[it->second]);
            mpz_class k = content(z);
            if (k > 1) {
                for (auto& e : z) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), k.get_mpz_t());
                if (track_)
                    for (auto& e : c) e.second /= Scalar(k);
            }
        }
    }

    // On dependence, `relation` (if given) receives the vanishing combination.
    bool insert(const SparseVector& v, std::size_t source, Combo* relation = nullptr)
    {
        Scalar s;
        ZVec z = integral(v, s);
        Combo c;
        if (track_) c.emplace_back(source, s);
        reduce(z, c);
        if (z.empty()) {
            if (relation != nullptr) *relation = std::move(c);
            return false;
        }
        lead_.emplace(z.front().first, rows_.size());
        rows_.push_back(std::move(z));
        if (track_) combos_.push_back(std::move(c));
        return true;
    }

private:
    bool track_;
    std::unordered_map<std::size_t, std::size_t> lead_;
    std::vector<ZVec> rows_;
    std::vector<Combo> combos_;
};

SolveResult solve_impl(const SparseMatrix& a, const Vector& b, bool want_certificate)
{
    if (b.size() != a.rows) throw DimensionMismatch("right-hand side has wrong length");
    Echelon e(true);
    for (std::size_t j = 0; j < a.cols; ++j) e.insert(a.columns[j], j);
    Scalar s;
    ZVec z = integral(sparsify(b), s);
    Combo c{{a.cols, s}};
    e.reduce(z, c);
    SolveResult out;
    if (z.empty()) {
        out.feasible = true;
        out.solution.assign(a.cols, Scalar(0));
        Scalar lambda;
        for (const auto& [j, x] : c)
            if (j == a.cols) lambda = x;
        for (const auto& [j, x] : c)
            if (j < a.cols) out.solution[j] = -x / lambda;
        return out;
    }
    out.feasible = false;
    if (want_certificate) {
        // y^T [A | b] = (0, ..., 0, 1) is solvable exactly when A x = b is not.
        SparseMatrix t = a.transpose();
        t.rows = a.cols + 1;
        for (std::size_t i = 0; i < a.rows; ++i)
            if (sgn(b[i]) != 0) t.columns[i].emplace_back(a.cols, b[i]);
        SolveResult dual = solve_impl(t, unit(a.cols + 1, a.cols), false);
        if (dual.feasible) out.certificate = std::move(dual.solution);
    }
    return out;
}

}  // namespace

std::size_t rank(const SparseMatrix& a)
{
    Echelon e(false);
    for (std::size_t j = 0; j < a.cols; ++j) e.insert(a.columns[j], j);
    return e.rank();
}

std::size_t rank(const Matrix& a) { return rank(SparseMatrix::from_dense(a)); }

SolveResult solve(const SparseMatrix& a, const Vector& b) { return solve_impl(a, b, true); }

std::vector<Vector> kernel_basis(const SparseMatrix& a)
{
    Echelon e(true);
    std::vector<Vector> out;
    for (std::size_t j = 0; j < a.cols; ++j) {
        Combo rel;
        if (e.insert(a.columns[j], j, &rel)) continue;
        Vector v(a.cols);
        for (const auto& [i, x] : rel) v[i] = x / rel.back().second;
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace lya
