#include "lleq/op_matrix.hpp"
#include "lleq/operator.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace lleq;
using P = OperatorPoly;

namespace {

/// Random operator with up to three terms and small exponents.
P random_operator(std::mt19937& rng)
{
    std::uniform_int_distribution<int> small(-2, 2), nonneg(0, 2), terms(1, 3), sym(0, 3);
    P out;
    const int count = terms(rng);
    for (int k = 0; k < count; ++k) {
        Scalar c(small(rng));
        switch (sym(rng)) {
        case 0: c = c * Scalar::i(); break;
        case 1: c = c * Scalar::g(); break;
        case 2: c = c * Scalar::lambda(); break;
        default: break;
        }
        if (c.is_zero()) c = Scalar(1);
        FunctionMonomial fn{nonneg(rng), small(rng), {}};
        if (sym(rng) == 0) fn.f = {nonneg(rng), nonneg(rng) % 2};
        DerivMonomial d{nonneg(rng), {nonneg(rng)}};
        out += P::monomial(c, fn, d);
    }
    return out;
}

} // namespace

TEST(OperatorRing, AxiomsOnRandomTriples)
{
    std::mt19937 rng(20240917);
    for (int trial = 0; trial < 1000; ++trial) {
        const P a = random_operator(rng), b = random_operator(rng), c = random_operator(rng);
        ASSERT_EQ((a * b) * c, a * (b * c)) << a << " | " << b << " | " << c;
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ((a + b) * c, a * c + b * c);
        ASSERT_EQ(P(1) * a, a);
        ASSERT_EQ(a * P(1), a);
        ASSERT_TRUE((a - a).is_zero());
    }
}

TEST(OperatorRing, NormalizationIsIdempotent)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const P a = random_operator(rng);
        P rebuilt;
        for (const auto& [m, c] : a.terms()) rebuilt += P::monomial(c, m.fn, m.d);
        EXPECT_EQ(rebuilt, a);
        EXPECT_EQ(a * P(1) * P(1), a);
    }
}

TEST(OperatorRing, CanonicalCommutators)
{
    EXPECT_EQ(commutator(P::dx(), P::x()), P(1));
    EXPECT_EQ(commutator(P::dt(), P::t()), P(1));
    EXPECT_TRUE(commutator(P::dx(), P::t()).is_zero());
    EXPECT_TRUE(commutator(P::dt(), P::x()).is_zero());
    EXPECT_TRUE(commutator(P::dx(2), P::x()).is_zero());
    EXPECT_EQ(commutator(P::dx(2), P::dx(1)), P());
}

TEST(OperatorRing, PowerCommutatorsFollowTheDerivative)
{
    for (int b = -4; b <= 4; ++b) EXPECT_EQ(commutator(P::dx(), P::x(b)), P(b) * P::x(b - 1)) << "b = " << b;
    for (int a = 0; a <= 5; ++a) {
        const P expected = a == 0 ? P() : P(a) * P::t(a - 1);
        EXPECT_EQ(commutator(P::dt(), P::t(a)), expected) << "a = " << a;
    }
}

TEST(OperatorRing, SecondDerivativeLeibniz)
{
    // dx^2 x^2 = x^2 dx^2 + 4 x dx + 2
    EXPECT_EQ(P::dx(1, 2) * P::x(2), P::x(2) * P::dx(1, 2) + P(4) * P::x() * P::dx() + P(2));
    // dt^2 t^3 = t^3 dt^2 + 6 t^2 dt + 6 t
    EXPECT_EQ(P::dt(2) * P::t(3), P::t(3) * P::dt(2) + P(6) * P::t(2) * P::dt() + P(6) * P::t());
}

TEST(OperatorRing, PrepotentialTower)
{
    EXPECT_EQ(P::f().derivative_x(), P::f(1));
    EXPECT_EQ((P::f() * P::f()).derivative_x(), P(2) * P::f() * P::f(1));
    EXPECT_EQ(P::dx() * P::f(), P::f() * P::dx() + P::f(1));
    EXPECT_EQ((P::x(-1)).derivative_x(), -P::x(-2));
    EXPECT_THROW(P::dx().derivative_x(), std::invalid_argument);
}

TEST(OperatorRing, CoefficientsCommute)
{
    const P g = P::g(), l = P::lambda(), i = P::i();
    EXPECT_EQ(g * P::dx(), P::dx() * g);
    EXPECT_EQ(i * i, P(-1));
    EXPECT_EQ((g + l) * (g - l), g * g - l * l);
}

TEST(OperatorRing, Predicates)
{
    EXPECT_TRUE(P::dx().has_derivatives());
    EXPECT_FALSE(P::x(-2).has_derivatives());
    EXPECT_TRUE(P::t().has_t());
    EXPECT_TRUE(P::f(2).has_f());
    EXPECT_TRUE((P::i() * P::dt() + P::dx(1, 2)).is_constant_coefficient());
    EXPECT_FALSE(P::x().is_constant_coefficient());
    EXPECT_TRUE(P(3).is_scalar());
    EXPECT_TRUE(P().is_zero());
}

TEST(OperatorRender, Grammar)
{
    const P g = P::g();
    EXPECT_EQ(to_string(P::i() * P::dt() + P::dx(1, 2) - g * g * P::x(-2)), "i*dt + dx^2 - g^2*x^-2");
    EXPECT_EQ(to_string(P::dx() * P::x(-1)), "x^-1*dx - x^-2");
    EXPECT_EQ(to_string(P::dx() * P::f()), "f*dx + f'");
    EXPECT_EQ(to_string(P()), "0");
    EXPECT_EQ(to_string(P(Rational(-1, 2)) * P::x()), "-1/2*x");
    EXPECT_EQ(to_string(P::dx(2) + P::dx(3) + P::dx(5)), "dy + dz + dx5");
    EXPECT_EQ(to_string(P::f(), "psi1"), "f*psi1");
    EXPECT_EQ(to_string(P(1), "psi3"), "psi3");
}

TEST(OpMatrix, TensorAndProducts)
{
    OpMatrix x(2), y(2);
    x(0, 0) = P(1);
    x(1, 1) = P(-1);
    y(0, 1) = P(1);
    y(1, 0) = P(1);
    EXPECT_TRUE(anticommutator(x, y).is_zero());
    EXPECT_EQ(x * x, OpMatrix::identity(2));
    const OpMatrix xy = tensor(x, y);
    EXPECT_EQ(xy.size(), 4u);
    EXPECT_EQ(xy * xy, OpMatrix::identity(4));
    EXPECT_EQ(xy(0, 1), P(1));
    EXPECT_EQ(xy(2, 3), P(-1));
    EXPECT_THROW(OpMatrix(3), std::invalid_argument);
}

TEST(OpMatrix, RightMultiplicationKeepsOrder)
{
    const OpMatrix m = OpMatrix::identity(2).times(P::x());
    const OpMatrix d = OpMatrix::identity(2).times(P::dx());
    EXPECT_EQ(d * m - m * d, OpMatrix::identity(2));
    EXPECT_EQ(OpMatrix::identity(2).left_times(P::dx()).times(P::x()), OpMatrix::diagonal(2, P::x() * P::dx() + P(1)));
}

TEST(OpMatrix, SymbolEvaluation)
{
    // i*dt + dx^2 at E, k: i*(-i E) + (i k)^2 = E - k^2
    const OpMatrix s = OpMatrix::diagonal(2, P::i() * P::dt() + P::dx(1, 2));
    const auto m = symbol_eval(s(0, 0), Rational(3), {Rational(1)});
    EXPECT_EQ(m.number(), GaussRational(Rational(2)));
    EXPECT_THROW(symbol_eval(P::x() * P::dx(), Rational(1), {Rational(1)}), std::invalid_argument);
}

TEST(Scalar, GaussianArithmetic)
{
    const GaussRational a(Rational(1), Rational(2)), b(Rational(3), Rational(-1));
    EXPECT_EQ(a * b, GaussRational(Rational(5), Rational(5)));
    EXPECT_EQ((a * b) / b, a);
    EXPECT_EQ(a.norm(), Rational(5));
    EXPECT_THROW(a / GaussRational(), std::domain_error);
    EXPECT_EQ(Scalar::g().str(), "g");
    EXPECT_THROW(Scalar::g().number(), std::logic_error);
}
