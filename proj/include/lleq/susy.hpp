#ifndef LLEQ_SUSY_HPP
#define LLEQ_SUSY_HPP

#include "lleq/lle.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace lleq {

/// V_plus = f^2 + f', V_minus = f^2 - f'.
struct PartnerPotentials
{
    OperatorPoly plus;
    OperatorPoly minus;
};

namespace detail {

inline void require_prepotential(const OperatorPoly& f)
{
    if (f.has_derivatives() || f.has_t())
        throw std::invalid_argument("prepotential '" + to_string(f) + "' must not contain derivatives or t");
}

} // namespace detail

/// The 4x4 equation QI Psi = XY dx Psi + XA f(x) Psi as an LLESpec.
inline LLESpec potential_spec(const OperatorPoly& f)
{
    detail::require_prepotential(f);
    return LLESpec("potential", "QI", {"XY"}, {{Word("XA"), f}});
}

/// D = QI - XY dx - XA f.
inline OpMatrix build_potential_operator(const OperatorPoly& f) { return build_operator(potential_spec(f)); }

/// D^2, computed by operator multiplication.
inline OpMatrix square_potential_operator(const OperatorPoly& f)
{
    const OpMatrix d = build_potential_operator(f);
    return d * d;
}

/// (i dt + dx^2 - f^2) * 1 - (I x X) f', the closed form D^2 must match.
inline OpMatrix square_closed_form(const OperatorPoly& f)
{
    detail::require_prepotential(f);
    const OperatorPoly free = OperatorPoly::i() * OperatorPoly::dt() + OperatorPoly::dx(1, 2);
    return OpMatrix::diagonal(4, free - f * f) - word_matrix("IX").times(f.derivative_x());
}

inline PartnerPotentials partner_potentials(const OperatorPoly& f)
{
    detail::require_prepotential(f);
    const OperatorPoly sq = f * f, df = f.derivative_x();
    return {sq + df, sq - df};
}

/// lhs * psi_c = sum_j rhs[j] * psi_j (components are 1-based in text).
struct ComponentEquation
{
    std::size_t component = 1;
    OperatorPoly lhs;
    std::array<OperatorPoly, 4> rhs;

    std::string str() const
    {
        std::string out = to_string(lhs, psi(component)) + " = ";
        bool first = true;
        for (std::size_t j = 0; j < 4; ++j) {
            if (rhs[j].is_zero()) continue;
            const std::string piece = to_string(rhs[j], psi(j + 1));
            if (first) out += piece;
            else if (piece.front() == '-') out += " - " + piece.substr(1);
            else out += " + " + piece;
            first = false;
        }
        if (first) out += "0";
        return out;
    }

    static std::string psi(std::size_t c) { return "psi" + std::to_string(c); }
};

/// Row expansion of D Psi = 0 and the second-order equations it implies.
struct ComponentSystem
{
    std::array<ComponentEquation, 2> algebraic;     ///< psi3, psi4 in terms of psi2, psi1
    std::array<ComponentEquation, 2> evolution;     ///< i dt psi1, i dt psi2
    std::array<ComponentEquation, 4> schroedinger;  ///< i dt psi_c for c = 1..4
};

namespace detail {

/// Solves row r of D Psi = 0 for the component whose coefficient is `pivot`.
inline ComponentEquation solve_row(const OpMatrix& d, std::size_t row, std::size_t component, const OperatorPoly& pivot)
{
    if (!(d(row, component) == pivot))
        throw std::logic_error("derive_components: unexpected coefficient " + to_string(d(row, component)) + " in row " +
                               std::to_string(row + 1));
    ComponentEquation eq{component + 1, pivot, {}};
    for (std::size_t j = 0; j < 4; ++j)
        if (j != component) eq.rhs[j] = -d(row, j);
    return eq;
}

} // namespace detail

inline ComponentSystem derive_components(const OperatorPoly& f)
{
    const OpMatrix d = build_potential_operator(f);
    const OperatorPoly idt = OperatorPoly::i() * OperatorPoly::dt();
    ComponentSystem sys;
    // rows 1, 2 carry psi3, psi4 with unit coefficient (upper-right block of QI)
    sys.algebraic = {detail::solve_row(d, 0, 2, 1), detail::solve_row(d, 1, 3, 1)};
    // rows 3, 4 carry i dt psi1, i dt psi2 (lower-left block of QI)
    sys.evolution = {detail::solve_row(d, 2, 0, idt), detail::solve_row(d, 3, 1, idt)};

    // expressions of psi3, psi4 in terms of psi1, psi2
    auto algebraic_of = [&](std::size_t comp) -> const ComponentEquation& { return sys.algebraic[comp - 2]; };
    auto evolution_of = [&](std::size_t comp) -> const ComponentEquation& { return sys.evolution[comp]; };

    // psi1, psi2: substitute psi3, psi4 into the evolution equations
    for (std::size_t c = 0; c < 2; ++c) {
        ComponentEquation eq{c + 1, idt, {}};
        const auto& evo = evolution_of(c);
        for (std::size_t j = 0; j < 4; ++j) {
            if (evo.rhs[j].is_zero()) continue;
            if (j < 2) {
                eq.rhs[j] += evo.rhs[j];
                continue;
            }
            const auto& alg = algebraic_of(j);
            for (std::size_t k = 0; k < 4; ++k)
                if (!alg.rhs[k].is_zero()) eq.rhs[k] += evo.rhs[j] * alg.rhs[k];
        }
        sys.schroedinger[c] = eq;
    }
    // psi3, psi4: apply i dt to the algebraic relations, then use the evolution equations
    for (std::size_t c = 2; c < 4; ++c) {
        ComponentEquation eq{c + 1, idt, {}};
        const auto& alg = algebraic_of(c);
        for (std::size_t k = 0; k < 4; ++k) {
            if (alg.rhs[k].is_zero()) continue;
            if (!commutator(idt, alg.rhs[k]).is_zero())
                throw std::logic_error("derive_components: i*dt does not commute with " + to_string(alg.rhs[k]));
            if (k >= 2) throw std::logic_error("derive_components: algebraic relation refers to psi3/psi4");
            const auto& evo = evolution_of(k);
            for (std::size_t j = 0; j < 4; ++j)
                if (!evo.rhs[j].is_zero()) eq.rhs[j] += alg.rhs[k] * evo.rhs[j];
        }
        sys.schroedinger[c] = eq;
    }
    return sys;
}

/// (lhs - rhs) of the derived second-order equations, as a 4x4 matrix, minus
/// D^2. Zero exactly when the derivation agrees with squaring the operator.
inline OpMatrix substitution_residual(const OperatorPoly& f)
{
    const ComponentSystem sys = derive_components(f);
    OpMatrix derived(4);
    for (const auto& eq : sys.schroedinger) {
        const std::size_t r = eq.component - 1;
        derived(r, r) += eq.lhs;
        for (std::size_t j = 0; j < 4; ++j) derived(r, j) -= eq.rhs[j];
    }
    return derived - square_potential_operator(f);
}

/// Reference forms for the formal prepotential f, in the rendering grammar.
struct GoldenComponents
{
    std::array<std::string, 2> algebraic{"psi3 = dx*psi2 + f*psi2", "psi4 = dx*psi1 - f*psi1"};
    std::array<std::string, 2> evolution{"i*dt*psi1 = -dx*psi4 - f*psi4", "i*dt*psi2 = -dx*psi3 + f*psi3"};
    std::array<std::string, 4> schroedinger{
        "i*dt*psi1 = -dx^2*psi1 + f^2*psi1 + f'*psi1",
        "i*dt*psi2 = -dx^2*psi2 + f^2*psi2 - f'*psi2",
        "i*dt*psi3 = -dx^2*psi3 + f^2*psi3 + f'*psi3",
        "i*dt*psi4 = -dx^2*psi4 + f^2*psi4 - f'*psi4",
    };
    std::string v_plus = "f^2 + f'";
    std::string v_minus = "f^2 - f'";
};

} // namespace lleq

#endif // LLEQ_SUSY_HPP
