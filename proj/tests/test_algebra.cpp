#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "lya/errors.hpp"
#include "lya/rota_baxter.hpp"
#include "oracles.hpp"

#include <random>

using namespace lya;

namespace {

Vector v(std::initializer_list<long> xs)
{
    Vector r;
    for (long x : xs) r.emplace_back(x);
    return r;
}

// Perturbs one ternary constant of a fixture by +1.
LYAlgebra bump_ternary(const LYAlgebra& a, std::size_t i, std::size_t j, std::size_t k, std::size_t l)
{
    LYAlgebra b = a;
    Vector val = a.ternary_basis(i, j, k);
    val[l] += 1;
    b.set_ternary(i, j, k, val);
    return b;
}

}  // namespace

TEST_CASE("brackets of the fixtures")
{
    LYAlgebra a = fx::two_dim(), b = fx::four_dim();
    CHECK(eval_binary(a, unit(2, 0), unit(2, 1)) == v({1, 0}));
    CHECK(eval_binary(a, unit(2, 1), unit(2, 0)) == v({-1, 0}));
    CHECK(eval_ternary(a, unit(2, 0), unit(2, 1), unit(2, 1)) == v({1, 0}));
    CHECK(eval_binary(b, unit(4, 0), unit(4, 1)) == v({0, 0, 0, 2}));
    CHECK(eval_ternary(b, unit(4, 0), unit(4, 1), unit(4, 0)) == v({0, 0, 0, 1}));

    std::mt19937_64 rng(1);
    for (int t = 0; t < 10; ++t) {
        Vector x(4), z(4);
        for (auto& c : x) c = random_scalar(rng);
        for (auto& c : z) c = random_scalar(rng);
        CHECK(is_zero(eval_binary(b, x, x)));
        CHECK(is_zero(eval_ternary(b, x, x, z)));
    }
    CHECK_THROWS_AS(eval_binary(a, unit(3, 0), unit(2, 0)), DimensionMismatch);
}

TEST_CASE("fixtures satisfy the axioms")
{
    for (const auto& a : {fx::two_dim(), fx::four_dim(), LYAlgebra(0), LYAlgebra(1), LYAlgebra(3)}) {
        Report r = verify_lya(a);
        CHECK(r.passed());
        auto ok = oracle::axioms_hold(a);
        CHECK((ok[0] && ok[1] && ok[2] && ok[3]));
    }
}

TEST_CASE("a wrong binary bracket is caught by name")
{
    LYAlgebra a(2);
    a.set_binary(0, 1, v({0, 1}));
    a.set_ternary(0, 1, 1, v({1, 0}));
    Report r = verify_lya(a);
    CHECK_FALSE(r.passed());
    auto ok = oracle::axioms_hold(a);
    CHECK(r.passed("binary_jacobi") == ok[0]);
    CHECK(r.passed("ternary_cyclic") == ok[1]);
    CHECK(r.passed("ternary_derivation") == ok[2]);
    CHECK(r.passed("fundamental_identity") == ok[3]);
    CHECK_FALSE(ok[2]);
    const Check* c = r.find("ternary_derivation");
    REQUIRE(c != nullptr);
    CHECK(c->violations > 0);
    REQUIRE(c->witness.size() == 4);
    auto res = oracle::axioms(a, c->witness[0], c->witness[1], c->witness[2], c->witness[3], 0);
    CHECK(c->residual == res.derivation);
}

TEST_CASE("verify_lya matches the axiom oracle on random structures")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 2 + trial % 2;
        LYAlgebra a(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                Vector val(n);
                if (rng() % 2) val[rng() % n] = random_scalar(rng);
                a.set_binary(i, j, val);
                for (std::size_t k = 0; k < n; ++k) {
                    Vector t(n);
                    if (rng() % 3 == 0) t[rng() % n] = random_scalar(rng);
                    a.set_ternary(i, j, k, t);
                }
            }
        Report r = verify_lya(a);
        auto ok = oracle::axioms_hold(a);
        CHECK(r.passed("binary_jacobi") == ok[0]);
        CHECK(r.passed("ternary_cyclic") == ok[1]);
        CHECK(r.passed("ternary_derivation") == ok[2]);
        CHECK(r.passed("fundamental_identity") == ok[3]);
    }
}

TEST_CASE("stored tensors must be skew")
{
    std::vector<Scalar> c(8), d(16);
    c[(0 * 2 + 1) * 2 + 0] = 1;  // [e1,e2] = e1 without the mirror entry
    CHECK_THROWS_AS(LYAlgebra::from_tensors(2, c, d), StructureError);
    c[(1 * 2 + 0) * 2 + 0] = -1;
    CHECK(LYAlgebra::from_tensors(2, c, d).c(1, 0, 0) == -1);
    CHECK_THROWS_AS(LYAlgebra(2).set_binary(1, 1, v({1, 0})), StructureError);
}

TEST_CASE("adjoint representation")
{
    for (const auto& a : {fx::two_dim(), fx::four_dim()}) {
        const std::size_t n = a.dim();
        Representation rep = adjoint_representation(a);
        CHECK(verify_representation(a, rep).passed());
        // D(x,y)z = [[x,y,z]]
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Matrix D = compute_D(a, rep, unit(n, i), unit(n, j));
                for (std::size_t k = 0; k < n; ++k) CHECK(D.apply(unit(n, k)) == a.ternary_basis(i, j, k));
                CHECK(D == compute_D(a, rep, unit(n, j), unit(n, i)).scaled(-1));
            }
    }
    LYAlgebra a = fx::two_dim();
    Representation rep = adjoint_representation(a);
    // mu(e2,e2)e1 = [[e1,e2,e2]] = e1
    CHECK(rep.mu_basis(1, 1).apply(unit(2, 0)) == v({1, 0}));
    // mu(e1,e2)e2 = [[e2,e1,e2]] = -e1, mu(e1,e2)e1 = 0
    CHECK(rep.mu_basis(0, 1).apply(unit(2, 1)) == v({-1, 0}));
    CHECK(is_zero(rep.mu_basis(0, 1).apply(unit(2, 0))));
    Matrix D = compute_D(a, rep, unit(2, 0), unit(2, 1));
    CHECK(D.apply(unit(2, 1)) == v({1, 0}));
    CHECK(is_zero(D.apply(unit(2, 0))));
    CHECK(adjoint_representation(LYAlgebra(3)) == zero_representation(3, 3));
}

TEST_CASE("zero representation and derived identities")
{
    for (std::size_t m : {0u, 1u, 3u}) CHECK(verify_representation(fx::four_dim(), zero_representation(4, m)).passed());
}

TEST_CASE("adjoint of a non-algebra fails")
{
    LYAlgebra bad = bump_ternary(fx::four_dim(), 0, 1, 3, 2);
    REQUIRE_FALSE(verify_lya(bad).passed());
    CHECK_FALSE(verify_representation(bad, adjoint_representation(bad)).passed());
}

TEST_CASE("semidirect product is an algebra exactly when the module is")
{
    LYAlgebra a = fx::two_dim();
    Representation rep = adjoint_representation(a);
    LYAlgebra s = semidirect_product(a, rep);
    CHECK(s.dim() == 4);
    CHECK(verify_lya(s).passed());

    // zero module: no V components in any bracket
    LYAlgebra z = semidirect_product(a, zero_representation(2, 2));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            Vector b = z.binary_basis(i, j);
            CHECK(is_zero(Vector(b.begin() + 2, b.end())));
        }

    std::mt19937_64 rng(4);
    int bad = 0;
    for (int trial = 0; trial < 30; ++trial) {
        Representation r = rep;
        std::size_t which = rng() % 4;
        std::size_t row = rng() % 2, col = rng() % 2;
        if (trial % 3 == 0) {
            // leave it alone
        } else if (trial % 3 == 1) {
            r.mu[which](row, col) += random_scalar(rng);
        } else {
            r.rho[which % 2](row, col) += random_scalar(rng);
        }
        bool rep_ok = verify_representation(a, r).passed();
        bool semi_ok = verify_lya(semidirect_product(a, r)).passed();
        CHECK(rep_ok == semi_ok);
        bad += !rep_ok;
    }
    CHECK(bad > 0);
}

TEST_CASE("Nijenhuis operators and deformed brackets")
{
    for (const auto& a : {fx::two_dim(), fx::four_dim()}) {
        const std::size_t n = a.dim();
        CHECK(is_nijenhuis_operator(a, Matrix::identity(n)).passed());
        CHECK(is_nijenhuis_operator(a, Matrix(n, n)).passed());
        CHECK(deformed_brackets(a, Matrix::identity(n)) == a);
        CHECK(deformed_brackets(a, Matrix(n, n)) == LYAlgebra(n));
    }
    LYAlgebra a = fx::two_dim();
    Representation rep = adjoint_representation(a);
    LYAlgebra s = semidirect_product(a, rep);
    Matrix NT = nijenhuis_from_operator(fx::R2(Scalar(1, 2), 1));
    REQUIRE(is_nijenhuis_operator(s, NT).passed());
    LYAlgebra d = deformed_brackets(s, NT);
    CHECK(verify_lya(d).passed());
    CHECK(is_lya_homomorphism(d, s, NT).passed());

    Matrix notN(2, 2);
    notN(0, 0) = 1;
    notN(1, 0) = 1;
    if (!is_nijenhuis_operator(a, notN).passed()) CHECK_THROWS_AS(deformed_brackets(a, notN), NotNijenhuis);
}

TEST_CASE("algebras from associative algebras")
{
    AssocAlgebra m2 = matrix_algebra(2);
    CHECK(verify_associative(m2).passed());
    LYAlgebra g = build_lya_from_associative(m2);
    CHECK(g.dim() == 4);
    CHECK(verify_lya(g).passed());

    AssocAlgebra one{1, {Scalar(1)}};
    CHECK(build_lya_from_associative(one) == LYAlgebra(1));

    // Q[x]/(x^2) is commutative
    AssocAlgebra dual{2, std::vector<Scalar>(8)};
    dual.mult[(0 * 2 + 0) * 2 + 0] = 1;
    dual.mult[(0 * 2 + 1) * 2 + 1] = 1;
    dual.mult[(1 * 2 + 0) * 2 + 1] = 1;
    CHECK(build_lya_from_associative(dual) == LYAlgebra(2));

    AssocAlgebra bad{2, std::vector<Scalar>(8)};
    bad.mult[(0 * 2 + 0) * 2 + 1] = 1;
    bad.mult[(1 * 2 + 0) * 2 + 0] = 1;
    CHECK_FALSE(verify_associative(bad).passed());
    CHECK_THROWS_AS(build_lya_from_associative(bad), NotAssociative);
}

TEST_CASE("truncated series integration operator")
{
    auto [g, omega] = truncated_series_rb_example(matrix_algebra(2), 2);
    CHECK(g.dim() == 12);
    CHECK(verify_lya(g).passed());
    CHECK(is_relative_rota_baxter(g, adjoint_representation(g), omega).passed());
    // the top block goes to zero
    for (std::size_t i = 8; i < 12; ++i) CHECK(is_zero(omega.column(i)));
    CHECK(omega(4, 0) == 1);
    CHECK(omega(8, 4) == Scalar(1, 2));

    AssocAlgebra one{1, {Scalar(1)}};
    auto [g1, o1] = truncated_series_rb_example(one, 3);
    CHECK(g1 == LYAlgebra(4));
    CHECK(is_relative_rota_baxter(g1, adjoint_representation(g1), o1).passed());
}
