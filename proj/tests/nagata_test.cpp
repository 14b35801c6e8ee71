#include "test_support.hpp"

using namespace nagata;
using test::P2;
using test::P3;

namespace {
const Poly3 X = Poly3::variable(var::x);
const Poly3 Y = Poly3::variable(var::y);
const Poly3 Z = Poly3::variable(var::z);
}  // namespace

TEST(BuildNagata, ClassicalMap) {
    const auto m = build_nagata(P3("x*z + y^2"));
    EXPECT_EQ(m.endo.f, P3("x - 2*y*(z*x+y^2) - z*(z*x+y^2)^2"));
    EXPECT_EQ(m.endo.g, P3("y + z*(z*x+y^2)"));
    EXPECT_EQ(m.endo.h, Z);
    ASSERT_TRUE(m.representative);
    EXPECT_EQ(*m.representative, P2("t1"));
}

TEST(BuildNagata, ZeroIsIdentity) {
    const auto m = build_nagata(Poly3());
    EXPECT_TRUE(m.endo.is_identity());
    ASSERT_TRUE(m.representative);
    EXPECT_TRUE(m.representative->is_zero());
}

TEST(BuildNagata, PhiEqualsX) {
    const auto m = build_nagata(X);
    EXPECT_EQ(m.endo, (PolyEndo{X - Rational(2) * (X * Y) - X * X * Z, Y + X * Z, Z}));
    EXPECT_FALSE(m.representative);
}

TEST(Jacobian, Identity) {
    const auto j = jacobian(PolyEndo::identity());
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(j[i][k], Poly3(i == k ? 1 : 0));
    EXPECT_EQ(jacobian_det(PolyEndo::identity()), Poly3(1));
}

TEST(Jacobian, NagataEntries) {
    const auto phi = P3("x*z + y^2");
    const auto j = jacobian(nagata_endo(phi));
    EXPECT_EQ(j[2][0], Poly3());
    EXPECT_EQ(j[2][1], Poly3());
    EXPECT_EQ(j[2][2], Poly3(1));
    Rng rng(7);
    for (int i = 0; i < 20; ++i) {
        const auto p = random_trivariate(rng, 4);
        EXPECT_EQ(jacobian(nagata_endo(p))[1][0], Z * partial(p, var::x));
        EXPECT_EQ(jacobian(nagata_endo(p))[1][1], Poly3(1) + Z * partial(p, var::y));
    }
}

TEST(Jacobian, Determinants) {
    EXPECT_EQ(jacobian_det(nagata_endo(P3("x*z + y^2"))), Poly3(1));
    EXPECT_EQ(jacobian_det(nagata_endo(X)), P3("1 - 2*y"));
}

TEST(Residual, Examples) {
    EXPECT_TRUE(pde_residual(P3("x*z + y^2")).is_zero());
    EXPECT_EQ(pde_residual(Y), Z);
    EXPECT_EQ(pde_residual(X), P3("-2*y"));
    EXPECT_TRUE(pde_residual(Poly3(make_rational(-5, 3))).is_zero());
}

TEST(JacobianReport, ConsistentWithResidual) {
    const auto yes = jacobian_report(P3("x*z + y^2"));
    EXPECT_TRUE(yes.is_constant_nonzero);
    EXPECT_TRUE(yes.residual.is_zero());
    const auto no = jacobian_report(Y);
    EXPECT_FALSE(no.is_constant_nonzero);
    EXPECT_EQ(no.determinant, Poly3(1) + Z);
}

TEST(IsAutomorphism, Examples) {
    const auto w = is_automorphism(P3("x*z + y^2"));
    EXPECT_TRUE(w.is_automorphism);
    ASSERT_TRUE(w.representative);
    EXPECT_EQ(*w.representative, P2("t1"));
    ASSERT_TRUE(w.inverse);
    EXPECT_TRUE(compose(nagata_endo(P3("x*z + y^2")), *w.inverse).is_identity());

    const auto nx = is_automorphism(X);
    EXPECT_FALSE(nx.is_automorphism);
    EXPECT_EQ(nx.residual, P3("-2*y"));
    EXPECT_FALSE(nx.inverse);
    EXPECT_FALSE(is_automorphism(Y).is_automorphism);
}

TEST(Decompose, Examples) {
    const auto q = P3("x*z + y^2");
    const auto phi = q * q + q * Z * Z - pow(Z, 3);
    ASSERT_TRUE(decompose(phi));
    EXPECT_EQ(*decompose(phi), P2("t1^2 + t1*t2^2 - t2^3"));
    EXPECT_EQ(*decompose(pow(Z, 7)), P2("t2^7"));
    EXPECT_FALSE(decompose(X));
    // Passes the y = 0 reading but fails the re-expansion check.
    EXPECT_FALSE(decompose(X * Z));
    EXPECT_FALSE(decompose(X * Z + Y));
}

TEST(Inverse, Examples) {
    EXPECT_TRUE(inverse_nagata(Poly2()).is_identity());
    const auto q = P3("x*z + y^2");
    const auto inv = inverse_nagata(P2("t1"));
    EXPECT_EQ(inv, (PolyEndo{X + Rational(2) * (Y * q) - Z * q * q, Y - Z * q, Z}));
    EXPECT_TRUE(compose(build_nagata(q).endo, inv).is_identity());
}

TEST(Compose, IdentityLaws) {
    Rng rng(9);
    for (int i = 0; i < 10; ++i) {
        const PolyEndo e{random_trivariate(rng, 3), random_trivariate(rng, 3), random_trivariate(rng, 3)};
        EXPECT_EQ(compose(e, PolyEndo::identity()), e);
        EXPECT_EQ(compose(PolyEndo::identity(), e), e);
    }
}

TEST(Milnor, Certificates) {
    const auto zero = milnor_certificate(Poly3());
    EXPECT_EQ(zero.for_x.a, Poly3(1));
    EXPECT_TRUE(zero.for_x.b.is_zero());
    EXPECT_TRUE(zero.for_x.c.is_zero());
    EXPECT_EQ(zero.for_y.b, Poly3(1));

    const auto q = P3("x*z + y^2");
    const auto c = milnor_certificate(q);
    EXPECT_EQ(c.for_x.a, Poly3(1));
    EXPECT_EQ(c.for_x.b, Rational(2) * q);
    EXPECT_EQ(c.for_x.c, -(q * q));
    EXPECT_EQ(c.for_y.a, Poly3());
    EXPECT_EQ(c.for_y.b, Poly3(1));
    EXPECT_EQ(c.for_y.c, -q);
}

TEST(Remark, CollisionForPhiEqualsX) {
    const auto e = nagata_endo(X);
    const std::array<Rational, 3> a{0, 0, 1}, b{-1, 1, 1};
    EXPECT_EQ(apply(e, a), apply(e, b));
    EXPECT_EQ(apply(e, a), (std::array<Rational, 3>{0, 0, 1}));
}

// --- properties -----------------------------------------------------------

TEST(NagataProperty, DeterminantIsOnePlusResidual) {
    Rng rng(301);
    for (int i = 0; i < 60; ++i) {
        const auto phi = random_trivariate(rng, 4);
        EXPECT_EQ(jacobian_det(nagata_endo(phi)), Poly3(1) + pde_residual(phi));
    }
}

TEST(NagataProperty, InvariantFormSolvesPde) {
    Rng rng(302);
    for (int i = 0; i < 100; ++i) EXPECT_TRUE(pde_residual(expand_bivariate(random_bivariate(rng, 10))).is_zero());
}

TEST(NagataProperty, DecomposeRoundTrip) {
    Rng rng(303);
    for (int i = 0; i < 100; ++i) {
        const auto p = random_bivariate(rng, 10);
        const auto back = decompose(expand_bivariate(p));
        ASSERT_TRUE(back);
        EXPECT_EQ(*back, p);
    }
}

TEST(NagataProperty, TwoSidedInverse) {
    Rng rng(304);
    for (int i = 0; i < 30; ++i) {
        const auto p = random_bivariate(rng, 4);
        const auto e = build_nagata(expand_bivariate(p)).endo;
        const auto inv = inverse_nagata(p);
        EXPECT_TRUE(compose(e, inv).is_identity());
        EXPECT_TRUE(compose(inv, e).is_identity());
    }
}

TEST(NagataProperty, MilnorCertificateExpands) {
    Rng rng(305);
    for (int i = 0; i < 100; ++i) {
        const auto phi = random_trivariate(rng, 4);
        const auto cert = milnor_certificate(phi);
        const auto e = nagata_endo(phi);
        EXPECT_EQ(cert.for_x.evaluate_on(e), X);
        EXPECT_EQ(cert.for_y.evaluate_on(e), Y);
    }
}
