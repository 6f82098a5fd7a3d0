#pragma once

#include "lya/algebra.hpp"
#include "lya/matrix.hpp"
#include "lya/report.hpp"
#include "lya/scalar.hpp"

#include <cstddef>
#include <random>
#include <utility>
#include <vector>

namespace lya {

// Basis e_i ^ e_j (i < j) of the exterior square, in lexicographic order.
class WedgeBasis {
public:
    WedgeBasis() = default;
    explicit WedgeBasis(std::size_t n);

    std::size_t dim() const { return n_; }
    std::size_t size() const { return pairs_.size(); }
    const std::pair<std::size_t, std::size_t>& pair(std::size_t k) const { return pairs_[k]; }
    // Index of e_i ^ e_j for i < j.
    std::size_t index(std::size_t i, std::size_t j) const { return idx_[i * n_ + j]; }

    // Coefficients of u ^ v in this basis.
    Vector wedge(const Vector& u, const Vector& v) const;

private:
    std::size_t n_ = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
    std::vector<std::size_t> idx_;
};

// An (i, n-i)-shuffle: `first` and `second` are sorted and partition 0..n-1.
struct Shuffle {
    std::vector<std::size_t> first;
    std::vector<std::size_t> second;
    int sign = 1;  // parity of inversions of first ++ second
};

std::vector<Shuffle> shuffles(std::size_t i, std::size_t n);

// Graded degree p cochain with arguments from an `arg_dim` space and values
// in a `val_dim` space.
//   f: (wedge)^p x val                 (absent for p = 0)
//   g: (wedge)^p x arg x val           (for p = 0 this is the linear map itself)
// Entry layout: the wedge tuple (b_1..b_p) is flattened with b_1 most
// significant, then the input vector index, then the output index.
// The cohomology level of a degree p cochain is p + 1.
class Cochain {
public:
    Cochain() = default;
    Cochain(int degree, std::size_t arg_dim, std::size_t val_dim);

    // Degree-0 cochain of the linear map A (val x arg matrix).
    static Cochain from_matrix(const Matrix& a);
    Matrix to_matrix() const;

    int degree() const { return degree_; }
    std::size_t arg_dim() const { return arg_; }
    std::size_t val_dim() const { return val_; }
    std::size_t wedge_dim() const { return w_; }
    std::size_t tuples() const { return tuples_; }

    std::vector<Scalar>& f() { return f_; }
    const std::vector<Scalar>& f() const { return f_; }
    std::vector<Scalar>& g() { return g_; }
    const std::vector<Scalar>& g() const { return g_; }

    Scalar& f_at(std::size_t tuple, std::size_t out) { return f_[tuple * val_ + out]; }
    const Scalar& f_at(std::size_t tuple, std::size_t out) const { return f_[tuple * val_ + out]; }
    Scalar& g_at(std::size_t tuple, std::size_t in, std::size_t out) { return g_[(tuple * arg_ + in) * val_ + out]; }
    const Scalar& g_at(std::size_t tuple, std::size_t in, std::size_t out) const {
        return g_[(tuple * arg_ + in) * val_ + out];
    }

    // Coordinates: f entries followed by g entries.
    std::size_t size() const { return f_.size() + g_.size(); }
    Scalar& coord(std::size_t k) { return k < f_.size() ? f_[k] : g_[k - f_.size()]; }
    const Scalar& coord(std::size_t k) const { return k < f_.size() ? f_[k] : g_[k - f_.size()]; }
    Vector coords() const;
    static Cochain from_coords(int degree, std::size_t arg_dim, std::size_t val_dim, const Vector& v);

    bool is_zero() const;
    bool same_shape(const Cochain& o) const;
    Cochain& operator+=(const Cochain& o);
    Cochain& operator-=(const Cochain& o);
    Cochain operator+(const Cochain& o) const;
    Cochain operator-(const Cochain& o) const;
    Cochain scaled(const Scalar& s) const;
    bool operator==(const Cochain& o) const = default;

private:
    int degree_ = 0;
    std::size_t arg_ = 0, val_ = 0, w_ = 0, tuples_ = 1;
    std::vector<Scalar> f_;
    std::vector<Scalar> g_;
};

// Number of coordinates of a degree p cochain.
std::size_t cochain_size(int degree, std::size_t arg_dim, std::size_t val_dim);

// Circle product on cochains of one space (arg_dim == val_dim for both).
Cochain circle(const Cochain& p, const Cochain& q);
Cochain circle_serial(const Cochain& p, const Cochain& q);

// [P,Q] = P o Q - (-1)^{pq} Q o P
Cochain graded_bracket(const Cochain& p, const Cochain& q);

// Value at one tuple: f[out] (empty at degree 0) and g[in][out].
struct TupleValue {
    Vector f;
    std::vector<Vector> g;
};

// [P,Q] at the listed output tuples only.
std::vector<TupleValue> graded_bracket_at(const Cochain& p, const Cochain& q, const std::vector<std::size_t>& tuples);

// Pi = (pi, omega): f(e_i^e_j) = [e_i,e_j], g(e_i^e_j, e_k) = [[e_i,e_j,e_k]].
Cochain algebra_to_pi(const LYAlgebra& alg);
LYAlgebra pi_to_algebra(const Cochain& pi);

// Whether [Pi,Pi] = 0. This only certifies the ternary-derivation and
// fundamental-identity axioms, not a full Lie-Yamaguti structure.
Report is_mc_element(const Cochain& pi);

// d_Pi(F) = [Pi, F]. Throws NotMaurerCartan.
Cochain differential_dPi(const Cochain& pi, const Cochain& f);

Scalar random_scalar(std::mt19937_64& rng);
Cochain random_cochain(std::mt19937_64& rng, int degree, std::size_t arg_dim, std::size_t val_dim);
Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols);

}  // namespace lya
