#include "test_support.hpp"

using namespace nagata;
using test::P2;
using test::P3;

namespace {

const Poly3 X = Poly3::variable(var::x);
const Poly3 Y = Poly3::variable(var::y);
const Poly3 Z = Poly3::variable(var::z);
const Poly2 T1 = Poly2::variable(var::t1);
const Poly2 T2 = Poly2::variable(var::t2);

Poly3 mono(std::uint32_t a, std::uint32_t b, std::uint32_t c, long k = 1) { return Poly3::monomial({a, b, c}, k); }

}  // namespace

TEST(Rational, LowestTerms) {
    auto r = make_rational(6, -4);
    EXPECT_EQ(r.get_num(), -3);
    EXPECT_EQ(r.get_den(), 2);
    EXPECT_EQ(make_rational(0, 5).get_den(), 1);
    EXPECT_THROW(make_rational(1, 0), std::domain_error);
    EXPECT_EQ(rational_from_string("10/4"), make_rational(5, 2));
}

TEST(Polynomial, AdditiveInverse) {
    EXPECT_TRUE((X + (-X)).is_zero());
    EXPECT_TRUE((X - X).terms().empty());
}

TEST(Polynomial, SquareOfQuadric) {
    const auto q = X * Z + Y * Y;
    const auto expected = mono(2, 0, 2) + mono(1, 2, 1, 2) + mono(0, 4, 0);
    EXPECT_EQ(q * q, expected);

    // Cross-check by evaluation, computing (a*c + b^2)^2 directly.
    Rng rng(11);
    for (int i = 0; i < 5; ++i) {
        const auto pt = test::random_point<3>(rng);
        const Rational inner = pt[0] * pt[2] + pt[1] * pt[1];
        EXPECT_EQ(evaluate(q * q, pt), Rational(inner * inner));
    }
}

TEST(Polynomial, PowZeroIsOne) {
    EXPECT_EQ(pow(X * Z + Y * Y, 0), Poly3(1));
    EXPECT_EQ(pow(Poly3(), 0), Poly3(1));
    EXPECT_TRUE(pow(Poly3(), 3).is_zero());
}

TEST(Polynomial, PowMatchesRepeatedProduct) {
    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        const auto p = random_trivariate(rng, 3);
        Poly3 slow(1);
        for (int k = 0; k < 5; ++k) slow *= p;
        EXPECT_EQ(pow(p, 5), slow);
    }
}

TEST(Polynomial, PartialDerivatives) {
    EXPECT_EQ(partial(X * Z + Y * Y, var::y), Rational(2) * Y);
    EXPECT_TRUE(partial(Poly3(make_rational(7, 3)), var::x).is_zero());
    EXPECT_EQ(partial(X * X * Z, var::x), Rational(2) * (X * Z));
}

TEST(Polynomial, Substitute) {
    EXPECT_EQ(substitute(X + Y, std::array<Poly3, 3>{Y, X, Z}), X + Y);
    EXPECT_TRUE(substitute(X, std::array<Poly3, 3>{Poly3(), Poly3(), Poly3()}).is_zero());
}

TEST(Polynomial, QuadricInvariantUnderInverseSubstitution) {
    Rng rng(5);
    for (int i = 0; i < 10; ++i) {
        const auto phi = expand_bivariate(random_bivariate(rng, 4));
        const std::array<Poly3, 3> images{X + Rational(2) * (Y * phi) - Z * phi * phi, Y - Z * phi, Z};
        EXPECT_EQ(substitute(invariant_quadric(), images), invariant_quadric());
    }
}

TEST(Polynomial, Evaluate) {
    const std::array<Rational, 3> p001{0, 0, 1};
    EXPECT_EQ(evaluate(X * Z + Y * Y, p001), 0);
    const std::array<Rational, 3> abc{make_rational(1, 2), -3, make_rational(5, 7)};
    EXPECT_EQ(evaluate(Z, abc), make_rational(5, 7));
    // The phi = x Nagata map sends (-1,1,1) to (0,0,1).
    const std::array<Rational, 3> q{-1, 1, 1};
    EXPECT_EQ(evaluate(X - Rational(2) * (Y * X) - Z * X * X, q), 0);
    EXPECT_EQ(evaluate(Y + Z * X, q), 0);
    EXPECT_EQ(evaluate(Z, q), 1);
}

TEST(Polynomial, WeightedDegree) {
    const auto p = P2("t1^2 - t2^3 + t1*t2^2");
    EXPECT_EQ(weighted_degree(p, invariant_weights()), Degree(4));
    EXPECT_TRUE(weighted_degree(Poly2(), invariant_weights()).is_neg_infinity());
    EXPECT_EQ(weighted_degree(X * Z + Y * Y, WeightVector<3>::uniform()), Degree(2));
    EXPECT_THROW(weighted_degree(Poly3(), WeightVector<3>::uniform()).value(), std::logic_error);
    EXPECT_LT(Degree::neg_infinity(), Degree(0));
    EXPECT_LT(Degree::neg_infinity(), Degree(-1000));
    EXPECT_THROW(WeightVector<2>({0, 1}), std::invalid_argument);
}

TEST(Polynomial, WeightedLeadingForm) {
    const auto p = P2("t1^2 - t2^3 + t1*t2^2");
    EXPECT_EQ(weighted_leading_form(p, invariant_weights()), P2("t1^2 + t1*t2^2"));
    EXPECT_EQ(weighted_leading_form(p, WeightVector<2>::uniform()), P2("-t2^3 + t1*t2^2"));
    const auto h = P3("x^2*y - 3*z^3 + x*y*z");
    EXPECT_EQ(weighted_leading_form(h, WeightVector<3>::uniform()), h);
    EXPECT_THROW(weighted_leading_form(Poly2(), invariant_weights()), std::domain_error);
}

TEST(Polynomial, HomogeneousComponents) {
    const auto comps = homogeneous_components(X * Z + Y * Y + Z);
    ASSERT_EQ(comps.size(), 2u);
    EXPECT_EQ(comps[0].degree, 1);
    EXPECT_EQ(comps[0].component, Z);
    EXPECT_EQ(comps[1].degree, 2);
    EXPECT_EQ(comps[1].component, X * Z + Y * Y);
    EXPECT_TRUE(homogeneous_components(Poly3()).empty());
    const auto y4 = homogeneous_components(pow(Y, 4));
    ASSERT_EQ(y4.size(), 1u);
    EXPECT_EQ(y4[0].degree, 4);
}

TEST(Polynomial, ExpandBivariate) {
    EXPECT_EQ(expand_bivariate(T1), X * Z + Y * Y);
    EXPECT_EQ(expand_bivariate(pow(T2, 6)), pow(Z, 6));
    const auto q = X * Z + Y * Y;
    EXPECT_EQ(expand_bivariate(P2("t1^2 - t2^3 + t1*t2^2")), q * q + q * Z * Z - pow(Z, 3));
}

// --- properties -----------------------------------------------------------

TEST(PolynomialProperty, RingAxioms) {
    Rng rng(101);
    for (int i = 0; i < 100; ++i) {
        const auto a = random_trivariate(rng, 4), b = random_trivariate(rng, 4), c = random_trivariate(rng, 4);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - b, a + (-b));
    }
}

TEST(PolynomialProperty, MixedPartialsCommute) {
    Rng rng(102);
    for (int i = 0; i < 100; ++i) {
        const auto p = random_trivariate(rng, 6);
        EXPECT_EQ(partial(partial(p, var::x), var::y), partial(partial(p, var::y), var::x));
        EXPECT_EQ(partial(partial(p, var::y), var::z), partial(partial(p, var::z), var::y));
    }
}

TEST(PolynomialProperty, Leibniz) {
    Rng rng(103);
    for (int i = 0; i < 100; ++i) {
        const auto p = random_trivariate(rng, 4), q = random_trivariate(rng, 4);
        for (std::size_t v = 0; v < 3; ++v)
            EXPECT_EQ(partial(p * q, v), partial(p, v) * q + p * partial(q, v));
    }
}

TEST(PolynomialProperty, SubstituteIsRingHomomorphism) {
    Rng rng(104);
    for (int i = 0; i < 50; ++i) {
        const auto p = random_trivariate(rng, 3), q = random_trivariate(rng, 3);
        const std::array<Poly3, 3> im{random_trivariate(rng, 2), random_trivariate(rng, 2), random_trivariate(rng, 2)};
        EXPECT_EQ(substitute(p * q, im), substitute(p, im) * substitute(q, im));
        EXPECT_EQ(substitute(p + q, im), substitute(p, im) + substitute(q, im));
    }
}

TEST(PolynomialProperty, EvaluateCommutesWithSubstitute) {
    Rng rng(105);
    for (int i = 0; i < 50; ++i) {
        const auto p = random_trivariate(rng, 3);
        const std::array<Poly3, 3> im{random_trivariate(rng, 3), random_trivariate(rng, 3), random_trivariate(rng, 3)};
        const auto pt = test::random_point<3>(rng);
        const std::array<Rational, 3> images{evaluate(im[0], pt), evaluate(im[1], pt), evaluate(im[2], pt)};
        EXPECT_EQ(evaluate(substitute(p, im), pt), evaluate(p, images));
    }
}

TEST(PolynomialProperty, LeadingFormOfExpansion) {
    Rng rng(106);
    for (int i = 0; i < 100; ++i) {
        const auto p = random_bivariate(rng, 10);
        const auto phi = expand_bivariate(p);
        EXPECT_EQ(total_degree(phi), weighted_degree(p, invariant_weights()));
        EXPECT_EQ(leading_form(phi), expand_bivariate(weighted_leading_form(p, invariant_weights())));
    }
}

TEST(PolynomialProperty, HomogeneousComponentsPartitionSupport) {
    Rng rng(107);
    for (int i = 0; i < 100; ++i) {
        const auto p = random_trivariate(rng, 6, 12);
        Poly3 sum;
        std::size_t terms = 0;
        for (const auto& [d, c] : homogeneous_components(p)) {
            EXPECT_TRUE(is_homogeneous(c));
            EXPECT_EQ(total_degree(c), Degree(d));
            terms += c.size();
            sum += c;
        }
        EXPECT_EQ(terms, p.size());
        EXPECT_EQ(sum, p);
    }
}
