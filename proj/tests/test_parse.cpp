#include "lleq/parse.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace lleq;
using P = OperatorPoly;

TEST(Parse, Atoms)
{
    EXPECT_EQ(parse_operator("i*dt + dx^2"), P::i() * P::dt() + P::dx(1, 2));
    EXPECT_EQ(parse_operator("g*x^-1"), P::g() * P::x(-1));
    EXPECT_EQ(parse_operator("f''"), P::f(2));
    EXPECT_EQ(parse_operator("f'^2"), P::f(1) * P::f(1));
    EXPECT_EQ(parse_operator("dy*dz*dw*dx5"), P::dx(2) * P::dx(3) * P::dx(4) * P::dx(5));
    EXPECT_EQ(parse_operator("lambda + 1/2"), P::lambda() + P(Rational(1, 2)));
    EXPECT_EQ(parse_operator("-(t*dt)"), -(P::t() * P::dt()));
}

TEST(Parse, ProductIsNoncommutative)
{
    EXPECT_EQ(parse_operator("dx*x"), P::x() * P::dx() + P(1));
    EXPECT_EQ(parse_operator("x*dx"), P::x() * P::dx());
    EXPECT_EQ(parse_operator("dx*f"), P::f() * P::dx() + P::f(1));
}

TEST(Parse, Errors)
{
    EXPECT_THROW(parse_operator(""), ParseError);
    EXPECT_THROW(parse_operator("x +"), ParseError);
    EXPECT_THROW(parse_operator("t^-1"), ParseError);
    EXPECT_THROW(parse_operator("dx^-1"), ParseError);
    EXPECT_THROW(parse_operator("x/x"), ParseError);
    EXPECT_THROW(parse_operator("x/0"), ParseError);
    EXPECT_THROW(parse_operator("psi"), ParseError);
    EXPECT_THROW(parse_operator("(x"), ParseError);
    EXPECT_THROW(parse_operator("dx0"), ParseError);
    try {
        parse_operator("x + q");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4u);
    }
}

TEST(Parse, RenderRoundTrip)
{
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coeff(-3, 3), den(1, 4), nonneg(0, 2), xpow(-3, 3), pick(0, 4);
    for (int trial = 0; trial < 500; ++trial) {
        P p;
        for (int k = 0; k < 3; ++k) {
            Scalar c(GaussRational(Rational(coeff(rng), den(rng)), Rational(pick(rng) == 0 ? coeff(rng) : 0)));
            if (pick(rng) == 1) c = c * Scalar::g() + Scalar::lambda();
            FunctionMonomial fn{nonneg(rng), xpow(rng), {nonneg(rng), pick(rng) % 2}};
            DerivMonomial d{nonneg(rng), {nonneg(rng), pick(rng) % 2}};
            p += P::monomial(c, fn, d);
        }
        const std::string text = to_string(p);
        ASSERT_EQ(parse_operator(text), p) << text;
    }
}
