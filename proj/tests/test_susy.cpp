#include "lleq/osp12.hpp"
#include "lleq/parse.hpp"
#include "lleq/susy.hpp"

#include <gtest/gtest.h>

using namespace lleq;
using P = OperatorPoly;

TEST(Susy, ComponentEquationsForFormalPrepotential)
{
    const ComponentSystem sys = derive_components(P::f());
    const GoldenComponents golden;
    for (std::size_t k = 0; k < 2; ++k) EXPECT_EQ(sys.algebraic[k].str(), golden.algebraic[k]);
    for (std::size_t k = 0; k < 2; ++k) EXPECT_EQ(sys.evolution[k].str(), golden.evolution[k]);
    for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(sys.schroedinger[k].str(), golden.schroedinger[k]);
}

TEST(Susy, ReferenceStrings)
{
    const GoldenComponents golden;
    EXPECT_EQ(golden.algebraic[0], "psi3 = dx*psi2 + f*psi2");
    EXPECT_EQ(golden.schroedinger[1], "i*dt*psi2 = -dx^2*psi2 + f^2*psi2 - f'*psi2");
}

TEST(Susy, PartnerPotentials)
{
    const PartnerPotentials v = partner_potentials(P::f());
    EXPECT_EQ(to_string(v.plus), "f^2 + f'");
    EXPECT_EQ(to_string(v.minus), "f^2 - f'");
    const PartnerPotentials c = partner_potentials(P::g() * P::x(-1));
    EXPECT_EQ(c.plus, (P::g() * P::g() - P::g()) * P::x(-2));
    EXPECT_EQ(c.minus, (P::g() * P::g() + P::g()) * P::x(-2));
    EXPECT_THROW(partner_potentials(P::dx()), std::invalid_argument);
}

TEST(Susy, SquareDiagonalCarriesAlternatingPartners)
{
    for (const P& f : {P::f(), P::g() * P::x(-1), P::x(3) - P(2) * P::x(), P::f() * P::f(1)}) {
        const OpMatrix sq = square_potential_operator(f);
        EXPECT_EQ(sq, square_closed_form(f)) << to_string(f);
        const PartnerPotentials v = partner_potentials(f);
        const P free = P::i() * P::dt() + P::dx(1, 2);
        EXPECT_EQ(sq(0, 0), free - v.plus);
        EXPECT_EQ(sq(1, 1), free - v.minus);
        EXPECT_EQ(sq(2, 2), free - v.plus);
        EXPECT_EQ(sq(3, 3), free - v.minus);
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c)
                if (r != c) EXPECT_TRUE(sq(r, c).is_zero());
    }
}

TEST(Susy, SubstitutionReproducesTheSquare)
{
    for (const P& f : {P::f(), P::g() * P::x(-1), parse_operator("x^2 + f'")})
        EXPECT_TRUE(substitution_residual(f).is_zero()) << to_string(f);
}

TEST(Susy, ConformalPrepotentialComponents)
{
    const ComponentSystem sys = derive_components(P::g() * P::x(-1));
    EXPECT_EQ(sys.schroedinger[0].str(), "i*dt*psi1 = -dx^2*psi1 + (g^2 - g)*x^-2*psi1");
    EXPECT_EQ(sys.schroedinger[1].str(), "i*dt*psi2 = -dx^2*psi2 + (g^2 + g)*x^-2*psi2");
}

TEST(Susy, ConformalOperatorIsTheOddGenerator)
{
    const osp12::Generators gens = osp12::build_generators();
    EXPECT_EQ(build_potential_operator(P::g() * P::x(-1)), gens[1].body);
    EXPECT_EQ(square_potential_operator(P::g() * P::x(-1)), gens[0].body);
}

TEST(Susy, ZeroPrepotentialIsFree)
{
    EXPECT_EQ(square_potential_operator(P()), OpMatrix::diagonal(4, P::i() * P::dt() + P::dx(1, 2)));
}
