#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "lya/deformations.hpp"
#include "lya/errors.hpp"
#include "oracles.hpp"

#include <random>

using namespace lya;

namespace {

struct Two {
    LYAlgebra g = fx::two_dim();
    Representation ad = adjoint_representation(g);
};

Matrix small_operator(std::mt19937_64& rng, std::size_t n, std::size_t m)
{
    Matrix T(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (rng() % 2) T(i, j) = random_scalar(rng);
    return T;
}

// T + t T' is Rota-Baxter for t = 1, 2, 3; with T itself that pins a cubic.
bool linear_by_sampling(const LYAlgebra& g, const Representation& rep, const Matrix& T, const Matrix& Tp)
{
    for (long t = 1; t <= 3; ++t)
        if (!is_zero(oracle::rb_residuals(g, rep, T + Tp.scaled(t)))) return false;
    return true;
}

}  // namespace

TEST_CASE("interpolation oracle recovers a known polynomial")
{
    std::vector<Scalar> t{0, 1, 2, 5};
    std::vector<Vector> v;
    for (const auto& x : t) v.push_back({Scalar(3) - 2 * x + x * x * x / 2});
    auto c = oracle::interpolate(t, v);
    CHECK(c[0][0] == 3);
    CHECK(c[1][0] == -2);
    CHECK(c[2][0] == 0);
    CHECK(c[3][0] == Scalar(1, 2));
}

TEST_CASE("coefficient identities match the residual polynomial")
{
    std::mt19937_64 rng(181);
    Two s;
    for (int k = 0; k < 5; ++k) {
        std::vector<Matrix> coeffs{fx::R2(random_scalar(rng), random_scalar(rng)), small_operator(rng, 2, 2),
                                   small_operator(rng, 2, 2)};
        auto poly = oracle::rb_residual_polynomial(s.g, s.ad, coeffs);
        for (int deg = 0; deg <= 6; ++deg)
            CHECK(oracle::residual_layout(rb_coefficient(s.g, s.ad, coeffs, deg, 2)) == poly[static_cast<std::size_t>(deg)]);
    }
}

TEST_CASE("linear deformations")
{
    std::mt19937_64 rng(191);
    Two s;
    Matrix T = fx::R2(Scalar(1, 2), 1);
    RBComplex cx(s.g, s.ad, T);
    CHECK(linear_deformation_check(cx, Matrix(2, 2)).passed());
    for (int k = 0; k < 10; ++k) {
        Matrix Tp = fx::R2(random_scalar(rng), random_scalar(rng));
        Report r = linear_deformation_check(cx, Tp);
        CHECK(r.passed());
        CHECK(r.passed("T'_rota_baxter"));
        CHECK(r.passed("T'_cocycle"));
    }
    BigSpaceContext ctx(s.g, s.ad);
    TwistedLInfinity tw(ctx, T);
    int yes = 0, no = 0;
    for (int k = 0; k < 20; ++k) {
        Matrix Tp = small_operator(rng, 2, 2);
        bool lin = linear_deformation_check(cx, Tp).passed();
        CHECK(lin == linear_by_sampling(s.g, s.ad, T, Tp));
        CHECK(lin == twisted_mc_polynomial_check(tw, Tp).passed());
        (lin ? yes : no)++;
    }
    CHECK(no > 0);
}

TEST_CASE("homomorphisms of operators")
{
    Two s;
    Matrix T = fx::R2(1, 1);
    CHECK(rb_homomorphism_check(s.g, s.ad, T, T, Matrix::identity(2), Matrix::identity(2)).passed());
    Matrix pv = Matrix::identity(2);
    pv(1, 0) = 3;
    Report r = rb_homomorphism_check(s.g, s.ad, T, T, Matrix::identity(2), pv);
    CHECK_FALSE(r.passed());
    CHECK_FALSE(r.passed("commutes"));
    CHECK(r.find("phi_g.preserves_binary") != nullptr);
}

TEST_CASE("wedge actions")
{
    LYAlgebra g = fx::four_dim();
    Representation ad = adjoint_representation(g);
    WedgeBasis wb(4);
    Vector x = unit(6, wb.index(0, 1));
    Matrix L = wedge_ternary_action(g, x);
    CHECK(L.apply(unit(4, 0)) == Vector{0, 0, 0, 1});
    CHECK(wedge_D(g, ad, x) == L);
    CHECK_THROWS_AS(wedge_ternary_action(g, Vector(5)), DimensionMismatch);
}

TEST_CASE("every wedge element of the fixtures is Nijenhuis")
{
    std::mt19937_64 rng(193);
    for (const auto& g : {fx::two_dim(), fx::four_dim()}) {
        const std::size_t n = g.dim();
        Matrix T = n == 2 ? fx::R2(random_scalar(rng), random_scalar(rng)) : fx::R4(rng);
        RBComplex cx(g, adjoint_representation(g), T);
        const std::size_t w = cx.wedges().size();
        CHECK(nijenhuis_element_check(cx, Vector(w)).passed());
        for (std::size_t k = 0; k < w; ++k) {
            Report r = nijenhuis_element_check(cx, unit(w, k));
            CHECK(r.passed());
            for (const char* name : {"nije", "nij1", "nij2", "nij3", "nij4", "nij5"}) CHECK(r.passed(name));
        }
    }
}

TEST_CASE("trivial deformation from a Nijenhuis element")
{
    Two s;
    RBComplex cx(s.g, s.ad, fx::R2(0, 1));
    std::vector<Scalar> ts{1, Scalar(1, 2), -2};
    TrivialDeformation d = trivial_deformation_from_nijenhuis(cx, Vector{1}, ts);
    CHECK(d.Tp == cx.delta0(Vector{1}));
    CHECK(d.Tp.column(1) == Vector{-1, 0});
    CHECK(d.linear.passed());
    REQUIRE(d.witnesses.size() == 3);
    for (const auto& [t, r] : d.witnesses) CHECK(r.passed());
    CHECK(cx.coboundary_solve(Cochain::from_matrix(d.Tp)).feasible);

    TrivialDeformation z = trivial_deformation_from_nijenhuis(cx, Vector{0}, ts);
    CHECK(z.Tp.is_zero());
}

TEST_CASE("a wedge element that is not Nijenhuis")
{
    // so(3)-like algebra from 2x2 matrices: the commutator algebra is not
    // nilpotent, so the first condition fails for some X
    LYAlgebra g = build_lya_from_associative(matrix_algebra(2));
    RBComplex cx(g, adjoint_representation(g), Matrix(4, 4));
    bool found = false;
    for (std::size_t k = 0; k < cx.wedges().size() && !found; ++k) {
        Vector x = unit(cx.wedges().size(), k);
        if (nijenhuis_element_check(cx, x).passed()) continue;
        found = true;
        CHECK_THROWS_AS(trivial_deformation_from_nijenhuis(cx, x, {1}), NotNijenhuis);
    }
    CHECK(found);
}

TEST_CASE("equivalent deformations")
{
    Two s;
    Matrix T = fx::R2(Scalar(1, 2), 1);
    RBComplex cx(s.g, s.ad, T);
    Matrix T1 = fx::R2(3, 0);
    CHECK(equivalence_check(cx, T1, T1, Vector{0}).passed());
    Matrix T2 = T1 + cx.delta0(Vector{1});
    Report r = equivalence_check(cx, T1, T2, Vector{1});
    CHECK(r.passed());
    CHECK(r.passed("same_class"));
    // R(0,1) is a cocycle outside the span of delta0(e1^e2) = R(-1,0)
    Report no = equivalence_check(cx, Matrix(2, 2), fx::R2(0, 1), Vector{0});
    CHECK_FALSE(no.passed());
    CHECK_FALSE(no.passed("cocycle"));
    const Check* c = no.find("same_class");
    REQUIRE(c != nullptr);
    CHECK_FALSE(c->passed);
    Matrix A = cx.matrix(0).to_dense();
    CHECK(is_zero(A.transpose().apply(c->residual)));
}

TEST_CASE("order-n deformations")
{
    std::mt19937_64 rng(197);
    Two s;
    Matrix T = fx::R2(Scalar(1, 2), 1);
    for (int k = 0; k < 5; ++k) {
        Matrix X = small_operator(rng, 2, 2);
        CHECK(order_n_check(s.g, s.ad, {X}).passed() == is_relative_rota_baxter(s.g, s.ad, X).passed());
    }
    Matrix T1 = fx::R2(1, -1);
    CHECK(order_n_check(s.g, s.ad, {T, T1}).passed());
    CHECK(order_n_check(s.g, s.ad, {T, T1}).passed() == linear_deformation_check(RBComplex(s.g, s.ad, T), T1).passed());
    CHECK(order_n_check(s.g, s.ad, {T, T1, Matrix(2, 2)}).passed());
    // a second coefficient that is not a cocycle breaks the t^2 identity
    RBComplex cx(s.g, s.ad, T);
    Matrix bad(2, 2);
    for (std::size_t k = 0; k < 4 && bad.is_zero(); ++k) {
        Matrix e(2, 2);
        e(k / 2, k % 2) = 1;
        if (!cx.is_cocycle(Cochain::from_matrix(e))) bad = e;
    }
    REQUIRE_FALSE(bad.is_zero());
    Report r = order_n_check(s.g, s.ad, {T, T1, bad});
    CHECK_FALSE(r.passed());
    CHECK(r.passed("s1_binary"));
    CHECK_FALSE((r.passed("s2_binary") && r.passed("s2_ternary")));
    CHECK_THROWS_AS(order_n_check(s.g, s.ad, {}), DimensionMismatch);
}

TEST_CASE("obstruction for a Nijenhuis deformation vanishes")
{
    for (const auto& g : {fx::two_dim(), fx::four_dim()}) {
        std::mt19937_64 rng(199);
        const std::size_t n = g.dim();
        Representation ad = adjoint_representation(g);
        Matrix T = n == 2 ? fx::R2(Scalar(1, 2), 1) : fx::R4(rng);
        RBComplex cx(g, ad, T);
        const std::size_t w = cx.wedges().size();
        for (std::size_t k = 0; k < w; ++k) {
            Matrix T1 = cx.delta0(unit(w, k));
            Obstruction ob = obstruction_class(cx, {T, T1});
            CHECK(ob.report.passed());
            CHECK(ob.report.passed("ob_cocycle"));
            REQUIRE(ob.extension.has_value());
            CHECK(order_n_check(g, ad, {T, T1, *ob.extension}).passed());
            auto poly = oracle::rb_residual_polynomial(g, ad, {T, T1});
            CHECK(oracle::residual_layout(ob.ob) == poly[2]);
        }
    }
}

TEST_CASE("zero higher coefficients extend by zero")
{
    Two s;
    Matrix T = fx::R2(Scalar(1, 2), 1);
    RBComplex cx(s.g, s.ad, T);
    Obstruction ob = obstruction_class(cx, {T, Matrix(2, 2), Matrix(2, 2)});
    CHECK(ob.ob.is_zero());
    REQUIRE(ob.extension.has_value());
    CHECK(ob.extension->is_zero());
}

TEST_CASE("an order-1 deformation that does not extend")
{
    Two s;
    for (const Matrix& T : {fx::R2(2, 1), Matrix(2, 2)}) {
        RBComplex cx(s.g, s.ad, T);
        Matrix T1(2, 2);
        T1(0, 0) = 1;
        REQUIRE(linear_deformation_check(cx, T1).passed("T'_cocycle"));
        REQUIRE(order_n_check(s.g, s.ad, {T, T1}).passed());
        Obstruction ob = obstruction_class(cx, {T, T1});
        CHECK(ob.report.passed("ob_cocycle"));
        CHECK_FALSE(ob.report.passed("class_trivial"));
        CHECK_FALSE(ob.extension.has_value());
        // y kills every coboundary and pairs to 1 with -Ob, all from the oracles
        oracle::Data d = oracle::induced_by_operator(s.g, s.ad, T);
        Matrix A = oracle::coboundary_matrix(d, 0);
        CHECK(is_zero(A.transpose().apply(ob.certificate)));
        auto poly = oracle::rb_residual_polynomial(s.g, s.ad, {T, T1});
        CHECK(oracle::residual_layout(ob.ob) == poly[2]);
        Scalar pair = 0;
        Vector mob = ob.ob.scaled(-1).coords();
        for (std::size_t i = 0; i < mob.size(); ++i) pair += ob.certificate[i] * mob[i];
        CHECK(pair == 1);
    }
}

TEST_CASE("obstruction preconditions")
{
    Two s;
    Matrix T = fx::R2(Scalar(1, 2), 1);
    RBComplex cx(s.g, s.ad, T);
    CHECK_THROWS_AS(obstruction_class(cx, {fx::R2(1, 1), Matrix(2, 2)}), NotVerifiedDeformation);
    Matrix bad(2, 2);
    bad(0, 0) = 1;
    bad(1, 0) = 1;
    REQUIRE_FALSE(order_n_check(s.g, s.ad, {T, bad}).passed());
    CHECK_THROWS_AS(obstruction_class(cx, {T, bad}), NotVerifiedDeformation);
}
