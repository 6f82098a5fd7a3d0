#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "lya/errors.hpp"
#include "lya/limits.hpp"
#include "lya/rb_cohomology.hpp"
#include "oracles.hpp"

#include <random>

using namespace lya;

namespace {

Vector random_vector(std::mt19937_64& rng, std::size_t n)
{
    Vector v(n);
    for (auto& x : v) x = random_scalar(rng);
    return v;
}

}  // namespace

TEST_CASE("delta0 on the 2-dim fixture")
{
    LYAlgebra g = fx::two_dim();
    Representation ad = adjoint_representation(g);
    RBComplex cx(g, ad, fx::R2(0, 1));
    Matrix d = cx.delta0(Vector{1});
    CHECK(is_zero(d.column(0)));
    CHECK(d.column(1) == Vector{-1, 0});
    CHECK(cx.delta0(Vector{0}).is_zero());

    RBComplex ab(LYAlgebra(3), zero_representation(3, 2), Matrix(3, 2));
    CHECK(ab.delta0(Vector{1, 2, 3}).is_zero());
    CHECK_THROWS_AS(cx.delta0(Vector{1, 1}), DimensionMismatch);

    Matrix bad(2, 2);
    bad(0, 0) = 1;
    CHECK_THROWS_AS(RBComplex(g, ad, bad), NotRotaBaxter);
}

TEST_CASE("delta0 against the direct formula")
{
    std::mt19937_64 rng(131);
    for (int t = 0; t < 5; ++t) {
        LYAlgebra g2 = fx::two_dim(), g4 = fx::four_dim();
        Matrix T2 = fx::R2(random_scalar(rng), random_scalar(rng)), T4 = fx::R4(rng);
        RBComplex c2(g2, adjoint_representation(g2), T2), c4(g4, adjoint_representation(g4), T4);
        Vector x2 = random_vector(rng, 1), x4 = random_vector(rng, 6);
        CHECK(c2.delta0(x2) == oracle::delta0_adjoint(g2, T2, x2));
        CHECK(c4.delta0(x4) == oracle::delta0_adjoint(g4, T4, x4));
        CHECK(c4.is_cocycle(Cochain::from_matrix(c4.delta0(x4))));
    }
}

TEST_CASE("both coboundary routes and the oracle agree")
{
    std::mt19937_64 rng(137);
    for (int t = 0; t < 3; ++t) {
        for (const auto& g : {fx::two_dim(), fx::four_dim()}) {
            const std::size_t n = g.dim();
            Representation ad = adjoint_representation(g);
            Matrix T = n == 2 ? fx::R2(random_scalar(rng), random_scalar(rng)) : fx::R4(rng);
            RBComplex cx(g, ad, T);
            oracle::Data d = oracle::induced_by_operator(g, ad, T);
            for (int p = 0; p <= (n == 2 ? 2 : 1); ++p) {
                Cochain F = random_cochain(rng, p, n, n);
                Cochain a = cx.coboundary(F);
                CHECK(a == cx.coboundary_explicit(F));
                CHECK(a == oracle::coboundary(d, F));
                CHECK(cx.coboundary(a).is_zero());
            }
        }
    }
}

TEST_CASE("explicit level-1 formula")
{
    // (df)(u,v) = [Tu,f(v)] - [Tv,f(u)] + T(rho(f(v))u - rho(f(u))v) - f([u,v]_T)
    std::mt19937_64 rng(139);
    LYAlgebra g = fx::two_dim();
    Representation ad = adjoint_representation(g);
    Matrix T = fx::R2(Scalar(2, 3), -1);
    RBComplex cx(g, ad, T);
    Matrix f = random_matrix(rng, 2, 2);
    Cochain d = cx.coboundary(Cochain::from_matrix(f));
    Vector u = unit(2, 0), v = unit(2, 1);
    Vector want = sub(g.binary(T.apply(u), f.apply(v)), g.binary(T.apply(v), f.apply(u)));
    want = add(want, T.apply(sub(ad.rho_of(f.apply(v)).apply(u), ad.rho_of(f.apply(u)).apply(v))));
    want = sub(want, f.apply(cx.sub_adjacent().binary(u, v)));
    CHECK(Vector{d.f_at(0, 0), d.f_at(0, 1)} == want);
}

TEST_CASE("gluing at level 0")
{
    for (const auto& g : {fx::two_dim(), fx::four_dim()}) {
        const std::size_t n = g.dim();
        std::mt19937_64 rng(149);
        Matrix T = n == 2 ? fx::R2(Scalar(1, 2), 1) : fx::R4(rng);
        RBComplex cx(g, adjoint_representation(g), T);
        for (std::size_t k = 0; k < cx.wedges().size(); ++k) {
            Cochain x = Cochain::from_matrix(cx.delta0(unit(cx.wedges().size(), k)));
            CHECK(cx.coboundary(x).is_zero());
            SolveResult s = cx.coboundary_solve(x);
            CHECK(s.feasible);
            CHECK(cx.matrix(0).apply(s.solution) == x.coords());
        }
        Matrix m0 = cx.matrix(0).to_dense(), m1 = cx.matrix(1).to_dense();
        CHECK((m1 * m0).is_zero());
        CHECK(m0 == oracle::delta0_matrix(g, T));
    }
}

TEST_CASE("dimensions on the 2-dim fixture")
{
    LYAlgebra g = fx::two_dim();
    Representation ad = adjoint_representation(g);
    Matrix T = fx::R2(Scalar(1, 2), 1);
    RBComplex cx(g, ad, T);
    oracle::Data d = oracle::induced_by_operator(g, ad, T);
    Matrix m0 = oracle::delta0_matrix(g, T);
    Matrix m1 = oracle::coboundary_matrix(d, 0), m2 = oracle::coboundary_matrix(d, 1);

    CohomologyDims h1 = cx.dims(1), h2 = cx.dims(2);
    CHECK(h1.dim_c == 4);
    CHECK(h1.dim_z == 4 - oracle::rank(m1));
    CHECK(h1.dim_b == oracle::rank(m0));
    CHECK(h2.dim_c == 6);
    CHECK(h2.dim_z == 6 - oracle::rank(m2));
    CHECK(h2.dim_b == oracle::rank(m1));
    CHECK(h1.dim_z == 3);
    CHECK(h1.dim_b == 1);
    CHECK(h1.dim_h == 2);
    CHECK(h2.dim_z == 4);
    CHECK(h2.dim_b == 1);
    CHECK(h2.dim_h == 3);
    CHECK(cx.level0_kernel() == 0);
    for (int level = 1; level <= 3; ++level) {
        CohomologyDims h = cx.dims(level);
        CHECK(h.dim_z + h.rank_out == h.dim_c);
        CHECK(h.dim_h == h.dim_z - h.dim_b);
        CHECK(cx.matrix(level) == cx.matrix_serial(level));
    }
    CHECK(cx.dims(1).dim_b <= cx.level_dim(0));
}

TEST_CASE("zero operator on an abelian algebra")
{
    RBComplex cx(LYAlgebra(2), zero_representation(2, 3), Matrix(2, 3));
    for (int level = 1; level <= 3; ++level) {
        CohomologyDims h = cx.dims(level);
        CHECK(h.dim_h == h.dim_c);
    }
    CHECK(cx.dims(1).dim_h == 6);
    CHECK(cx.level0_kernel() == 1);
}

TEST_CASE("level cap")
{
    LYAlgebra g = fx::two_dim();
    RBComplex cx(g, adjoint_representation(g), fx::R2(0, 1));
    int saved = max_level();
    set_max_level(1);
    CHECK_THROWS_AS(cx.matrix(2), ResourceCapExceeded);
    CHECK_THROWS_AS(cx.dims(2), ResourceCapExceeded);
    set_max_level(saved);
    CHECK_THROWS_AS(cx.dims(0), DimensionMismatch);
}

TEST_CASE("membership and preimages")
{
    std::mt19937_64 rng(151);
    LYAlgebra g = fx::two_dim();
    RBComplex cx(g, adjoint_representation(g), fx::R2(0, 1));
    SolveResult z = cx.coboundary_solve(Cochain(1, 2, 2));
    CHECK(z.feasible);
    CHECK(is_zero(z.solution));
    int non = 0;
    for (int t = 0; t < 10; ++t) {
        Cochain F = random_cochain(rng, 1, 2, 2);
        bool c = cx.is_cocycle(F);
        CHECK(c == cx.coboundary(F).is_zero());
        non += !c;
        Cochain b = cx.coboundary(random_cochain(rng, 0, 2, 2));
        SolveResult s = cx.coboundary_solve(b);
        REQUIRE(s.feasible);
        CHECK(cx.coboundary(Cochain::from_coords(0, 2, 2, s.solution)) == b);
    }
    CHECK(non > 0);
}

TEST_CASE("coboundary against the twisted differential")
{
    std::mt19937_64 rng(157);
    for (const auto& g : {fx::two_dim(), fx::four_dim()}) {
        const std::size_t n = g.dim();
        Representation ad = adjoint_representation(g);
        Matrix T = n == 2 ? fx::R2(random_scalar(rng), random_scalar(rng)) : fx::R4(rng);
        RBComplex cx(g, ad, T);
        BigSpaceContext ctx(g, ad);
        TwistedLInfinity tw(ctx, T);
        for (int p = 0; p <= (n == 2 ? 2 : 1); ++p) {
            Cochain F = random_cochain(rng, p, n, n);
            Report r = theorem_diff_oracle(cx, tw, F);
            CHECK(r.passed());
            Scalar s = p % 2 ? -1 : 1;
            CHECK(cx.coboundary(F) == tw.l1(F).scaled(s));
        }
        CHECK(theorem_diff_oracle(cx, tw, Cochain(1, n, n)).passed());
    }
}
