#include <gtest/gtest.h>

#include <random>

#include "eulerian/polynomial.hpp"
#include "test_oracles.hpp"

using eulerian::Polynomial;
using eulerian::Rational;

namespace {

const Polynomial kOnePlusX{1, 1};

} // namespace

TEST(Rational, CanonicalForm) {
    EXPECT_EQ(eulerian::make_rational(4, -6), Rational(-2, 3));
    EXPECT_EQ(eulerian::to_string(eulerian::make_rational(0, 7)), "0");
    EXPECT_EQ(eulerian::make_rational(0, 7).get_den(), 1);
    EXPECT_THROW(eulerian::make_rational(1, 0), eulerian::DomainError);
}

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(eulerian::parse_rational("-1/1000000"), Rational(-1, 1000000));
    EXPECT_EQ(eulerian::parse_rational("6/4"), Rational(3, 2));
    EXPECT_EQ(eulerian::parse_rational("+5"), Rational(5));
    EXPECT_EQ(eulerian::to_string(Rational(-4)), "-4");
    EXPECT_EQ(eulerian::to_string(Rational(3, 2)), "3/2");
    EXPECT_THROW(eulerian::parse_rational("1/0"), eulerian::DomainError);
    EXPECT_THROW(eulerian::parse_rational("1.5"), eulerian::DomainError);
    EXPECT_THROW(eulerian::parse_rational(""), eulerian::DomainError);
    EXPECT_THROW(eulerian::parse_rational("3/-4"), eulerian::DomainError);
}

TEST(Polynomial, ZeroIsEmpty) {
    Polynomial z{0, 0, 0};
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.degree(), Polynomial::kZeroDegree);
    EXPECT_EQ(z.size(), 0u);
    EXPECT_EQ(Polynomial({1, 2, 0}).degree(), 1);
    EXPECT_EQ((kOnePlusX - kOnePlusX).size(), 0u);
}

TEST(Polynomial, RingOps) {
    EXPECT_EQ(kOnePlusX + Polynomial{}, kOnePlusX);
    EXPECT_EQ(kOnePlusX * kOnePlusX, (Polynomial{1, 2, 1}));
    EXPECT_EQ(kOnePlusX * (Polynomial{1, -1}), (Polynomial{1, 0, -1}));
    EXPECT_EQ(Rational(3) * kOnePlusX, (Polynomial{3, 3}));
    EXPECT_TRUE((Rational(0) * kOnePlusX).is_zero());
    EXPECT_EQ(Polynomial::linear_power(1, 3), (Polynomial{1, 3, 3, 1}));
    EXPECT_EQ(Polynomial::linear_power(-2, 2), (Polynomial{4, -4, 1}));
}

TEST(Polynomial, Derivative) {
    EXPECT_TRUE(derivative(Polynomial{1}).is_zero());
    EXPECT_EQ(derivative(Polynomial{1, 4, 1}), (Polynomial{4, 2}));
    EXPECT_EQ(derivative(Polynomial::monomial(1, 3)), Polynomial::monomial(3, 2));
}

TEST(Polynomial, Reciprocal) {
    EXPECT_EQ(reciprocal(Polynomial{1, 3}, 2), (Polynomial{0, 3, 1}));
    EXPECT_EQ(reciprocal(Polynomial{1, 2, 1}, 2), (Polynomial{1, 2, 1}));
    EXPECT_EQ(reciprocal(Polynomial{1}, 3), Polynomial::monomial(1, 3));
    EXPECT_THROW(reciprocal(Polynomial{1, 2, 1}, 1), eulerian::DomainError);
}

TEST(Polynomial, EvenOddSplit) {
    auto [e, o] = even_odd_split(Polynomial{1, 3, 3, 1});
    EXPECT_EQ(e, (Polynomial{1, 3}));
    EXPECT_EQ(o, (Polynomial{3, 1}));
    auto [e2, o2] = even_odd_split(Polynomial{1, 2, 1});
    EXPECT_EQ(e2, (Polynomial{1, 1}));
    EXPECT_EQ(o2, (Polynomial{2}));
    auto [e3, o3] = even_odd_split(Polynomial{7});
    EXPECT_EQ(e3, (Polynomial{7}));
    EXPECT_TRUE(o3.is_zero());
}

TEST(Polynomial, Interleave) {
    EXPECT_EQ(interleave(Polynomial{1, 3}, Polynomial{3, 1}), Polynomial::linear_power(1, 3));
    EXPECT_EQ(interleave(Polynomial{1, 2}, Polynomial{}), (Polynomial{1, 0, 2}));
    EXPECT_EQ(interleave(Polynomial{}, Polynomial{1}), Polynomial::x());
    EXPECT_TRUE(interleave(Polynomial{}, Polynomial{}).is_zero());
}

TEST(Polynomial, Evaluate) {
    EXPECT_EQ(evaluate(Polynomial{1, 4, 1}, 1), 6);
    EXPECT_EQ(evaluate(Polynomial{5, 4, 1}, 0), 5);
    EXPECT_EQ(evaluate(Polynomial{1, 6, 1}, 1), 8);
    EXPECT_EQ(evaluate(Polynomial{1, 1}, Rational(-1, 2)), Rational(1, 2));
    EXPECT_EQ(evaluate(Polynomial{}, 3), 0);
}

TEST(Polynomial, Gcd) {
    EXPECT_EQ(poly_gcd(Polynomial{-1, 0, 1}, Polynomial{-1, 1}), (Polynomial{-1, 1}));
    EXPECT_EQ(poly_gcd(Polynomial{3, 1, 7}, Polynomial{1}), (Polynomial{1}));
    EXPECT_EQ(poly_gcd(Polynomial{1, 2, 1}, Polynomial{2, 3, 1}), (Polynomial{1, 1}));
    EXPECT_EQ(poly_gcd(Polynomial{2, 2}, Polynomial{}), (Polynomial{1, 1}));
    EXPECT_THROW(poly_gcd(Polynomial{}, Polynomial{}), eulerian::DomainError);
}

TEST(Polynomial, DivisionAndContent) {
    auto [q, r] = divide(Polynomial{1, 0, 0, 1}, Polynomial{1, 1});
    EXPECT_EQ(q, (Polynomial{1, -1, 1}));
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(divide(Polynomial{2, 0, 1}, Polynomial{0, 1}).remainder, (Polynomial{2}));
    EXPECT_EQ(content(Polynomial{Rational(2, 3), Rational(4, 9)}), Rational(2, 9));
    EXPECT_EQ(primitive_part(Polynomial{Rational(-2, 3), Rational(4, 9)}), (Polynomial{-3, 2}));
    EXPECT_THROW(exact_quotient(Polynomial{1, 0, 1}, Polynomial{1, 1}), eulerian::InvariantError);
    EXPECT_THROW(divide(Polynomial{1}, Polynomial{}), eulerian::DomainError);
}

TEST(Polynomial, ToString) {
    EXPECT_EQ(to_string(Polynomial{1, 4, 1}), "1 + 4*x + x^2");
    EXPECT_EQ(to_string(Polynomial{0, -1, Rational(1, 2)}), "-x + 1/2*x^2");
    EXPECT_EQ(to_string(Polynomial{}), "0");
}

// Randomized algebraic laws.

TEST(PolynomialProperties, SplitInterleaveRoundTrip) {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 300; ++i) {
        Polynomial p = eulerian::testing::random_polynomial(rng, 9);
        auto [e, o] = even_odd_split(p);
        EXPECT_EQ(interleave(e, o), p);
    }
}

TEST(PolynomialProperties, RingAxioms) {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 200; ++i) {
        Polynomial a = eulerian::testing::random_polynomial(rng), b = eulerian::testing::random_polynomial(rng),
                   c = eulerian::testing::random_polynomial(rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) - b, a);
    }
}

TEST(PolynomialProperties, ReciprocalInvolution) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        Polynomial p = eulerian::testing::random_polynomial(rng);
        if (p.is_zero() || p[0] == 0) continue;
        EXPECT_EQ(reciprocal(reciprocal(p, p.degree()), p.degree()), p);
    }
}

TEST(PolynomialProperties, DerivativeLinearAndLeibniz) {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 200; ++i) {
        Polynomial a = eulerian::testing::random_polynomial(rng), b = eulerian::testing::random_polynomial(rng);
        Rational s = eulerian::testing::random_rational(rng);
        EXPECT_EQ(derivative(s * a + b), s * derivative(a) + derivative(b));
        EXPECT_EQ(derivative(a * b), derivative(a) * b + a * derivative(b));
    }
}

TEST(PolynomialProperties, DivisionIdentityAndGcdDivides) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        Polynomial a = eulerian::testing::random_polynomial(rng), b = eulerian::testing::random_polynomial(rng);
        if (b.is_zero()) continue;
        auto [q, r] = divide(a, b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_LT(r.degree(), b.degree());
        Polynomial common = eulerian::testing::random_polynomial(rng, 3);
        if (common.is_zero() || a.is_zero()) continue;
        Polynomial g = poly_gcd(a * common, b * common);
        EXPECT_EQ(g.leading(), 1);
        EXPECT_TRUE(divide(a * common, g).remainder.is_zero());
        EXPECT_TRUE(divide(b * common, g).remainder.is_zero());
        EXPECT_TRUE(divide(g, monic(common)).remainder.is_zero());
    }
}
