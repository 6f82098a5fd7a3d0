#pragma once

#include "lya/matrix.hpp"
#include "lya/report.hpp"
#include "lya/scalar.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace lya {

// Structure constants of a Lie-Yamaguti algebra over Q.
// c(i,j,k): coefficient of e_k in [e_i,e_j].
// d(i,j,k,l): coefficient of e_l in [[e_i,e_j,e_k]].
class LYAlgebra {
public:
    LYAlgebra() = default;
    explicit LYAlgebra(std::size_t n);

    // Throws StructureError unless c and d are skew in the first two slots.
    static LYAlgebra from_tensors(std::size_t n, std::vector<Scalar> c, std::vector<Scalar> d);

    std::size_t dim() const { return n_; }
    const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }
    const Scalar& d(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return d_[((i * n_ + j) * n_ + k) * n_ + l];
    }
    const std::vector<Scalar>& binary_tensor() const { return c_; }
    const std::vector<Scalar>& ternary_tensor() const { return d_; }

    // Sets [e_i,e_j] = value and [e_j,e_i] = -value. Requires i != j.
    void set_binary(std::size_t i, std::size_t j, const Vector& value);
    // Sets [[e_i,e_j,e_k]] = value and [[e_j,e_i,e_k]] = -value. Requires i != j.
    void set_ternary(std::size_t i, std::size_t j, std::size_t k, const Vector& value);

    Vector binary(const Vector& x, const Vector& y) const;
    Vector ternary(const Vector& x, const Vector& y, const Vector& z) const;
    Vector binary_basis(std::size_t i, std::size_t j) const;
    Vector ternary_basis(std::size_t i, std::size_t j, std::size_t k) const;

    bool operator==(const LYAlgebra&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<Scalar> c_;
    std::vector<Scalar> d_;
};

// (rho, mu) acting on an m-dimensional module V.
// rho[a] is the m x m matrix of rho(e_a); mu[a*n+b] is mu(e_a,e_b).
struct Representation {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<Matrix> rho;
    std::vector<Matrix> mu;

    Representation() = default;
    Representation(std::size_t n, std::size_t m);

    const Matrix& mu_basis(std::size_t a, std::size_t b) const { return mu[a * n + b]; }
    Matrix& mu_basis(std::size_t a, std::size_t b) { return mu[a * n + b]; }
    Matrix rho_of(const Vector& x) const;
    Matrix mu_of(const Vector& x, const Vector& y) const;

    bool operator==(const Representation&) const = default;
};

struct AssocAlgebra {
    std::size_t dim = 0;
    std::vector<Scalar> mult;  // mult[(i*dim+j)*dim+k]: coefficient of e_k in e_i e_j

    Vector product(const Vector& x, const Vector& y) const;
};

Vector eval_binary(const LYAlgebra& alg, const Vector& x, const Vector& y);
Vector eval_ternary(const LYAlgebra& alg, const Vector& x, const Vector& y, const Vector& z);

// Checks the four axioms on all basis tuples. Check names:
// "binary_jacobi", "ternary_cyclic", "ternary_derivation", "fundamental_identity".
Report verify_lya(const LYAlgebra& alg);

// D(x,y) = mu(y,x) - mu(x,y) + [rho(x),rho(y)] - rho([x,y]).
Matrix compute_D(const LYAlgebra& alg, const Representation& rep, const Vector& x, const Vector& y);

// Five defining identities plus three implied ones (reported as "derived_*").
Report verify_representation(const LYAlgebra& alg, const Representation& rep);

Representation adjoint_representation(const LYAlgebra& alg);
Representation zero_representation(std::size_t n, std::size_t m);

// Brackets on g + V; g occupies indices 0..n-1, V the indices n..n+m-1.
LYAlgebra semidirect_product(const LYAlgebra& alg, const Representation& rep);

// Checks that phi: src -> dst preserves both brackets.
Report is_lya_homomorphism(const LYAlgebra& src, const LYAlgebra& dst, const Matrix& phi);

Report is_nijenhuis_operator(const LYAlgebra& alg, const Matrix& N);
// Throws NotNijenhuis if N fails is_nijenhuis_operator.
LYAlgebra deformed_brackets(const LYAlgebra& alg, const Matrix& N);

Report verify_associative(const AssocAlgebra& a);
// [x,y] = xy - yx, [[x,y,z]] = [[x,y],z]. Throws NotAssociative.
LYAlgebra build_lya_from_associative(const AssocAlgebra& a);
AssocAlgebra matrix_algebra(std::size_t k);

// A[nu]/(nu^{N+1}) with basis a_i nu^s at index s*dim(A)+i, and the
// integration operator a nu^s -> a nu^{s+1}/(s+1), zero on the top block.
std::pair<LYAlgebra, Matrix> truncated_series_rb_example(const AssocAlgebra& a, std::size_t N);

}  // namespace lya
