#ifndef LLEQ_OSP12_HPP
#define LLEQ_OSP12_HPP

#include "lleq/linalg.hpp"
#include "lleq/word.hpp"

#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace lleq::osp12 {

enum class Parity { Even, Odd };

/// Generator names, in the fixed order used for expansion coefficients.
enum class Name { H, Omega, Dil, Xi, K };

inline const char* to_string(Name n)
{
    switch (n) {
    case Name::H: return "H";
    case Name::Omega: return "Omega";
    case Name::Dil: return "Dil";
    case Name::Xi: return "Xi";
    case Name::K: return "K";
    }
    return "?";
}

struct Generator
{
    Name name;
    Parity parity;
    Rational scaling_dim;
    OpMatrix body;
};

using Generators = std::array<Generator, 5>;

/// Lower-left entry of R: the reference value lambda, or 2*lambda - 1, the
/// unique choice for which every bracket closes at arbitrary lambda. Both
/// agree at lambda = 1.
enum class REntry { Lambda, Closing };

struct Parameters
{
    std::optional<Rational> lambda; ///< nullopt keeps lambda formal
    REntry r_entry = REntry::Lambda;
};

inline OperatorPoly lambda_value(const Parameters& p)
{
    return p.lambda ? OperatorPoly(*p.lambda) : OperatorPoly::lambda();
}

/// Lambda = diag(lambda, lambda + 1/2).
inline OpMatrix aux_lambda(const Parameters& p = {})
{
    OpMatrix m(2);
    m(0, 0) = lambda_value(p);
    m(1, 1) = lambda_value(p) + OperatorPoly(Rational(1, 2));
    return m;
}

/// R = [[0, 0], [r, 0]].
inline OpMatrix aux_r(const Parameters& p = {})
{
    OpMatrix m(2);
    m(1, 0) = p.r_entry == REntry::Lambda ? lambda_value(p) : OperatorPoly(2) * lambda_value(p) - OperatorPoly(1);
    return m;
}

inline Generators build_generators(const Parameters& params = {})
{
    using P = OperatorPoly;
    const P g = P::g(), i = P::i(), t = P::t(), x = P::x(), dt = P::dt(), dx = P::dx();
    const OpMatrix one = OpMatrix::identity(4);
    const OpMatrix ix = word_matrix("IX"), qi = word_matrix("QI"), xy = word_matrix("XY"), xa = word_matrix("XA");
    const OpMatrix lambda_i = tensor(aux_lambda(params), OpMatrix::identity(2));
    const OpMatrix r_i = tensor(aux_r(params), OpMatrix::identity(2));

    const OpMatrix h = one.times(i * dt + dx * dx - g * g * P::x(-2)) + ix.times(g * P::x(-2));
    const OpMatrix omega = qi - xy.times(dx) - xa.times(g * P::x(-1));
    const OpMatrix dil = one.times(P(Rational(1, 4)) + P(Rational(1, 2)) * x * dx + t * dt) + lambda_i;
    const OpMatrix xi = qi.times(-i * t) - xy.times(P(Rational(1, 2)) * x) + r_i;
    const OpMatrix k = one.times(-i * t * t * dt + P(Rational(1, 4)) * x * x) - lambda_i.times(P(2) * i * t);

    return {{
        {Name::H, Parity::Even, Rational(1), h},
        {Name::Omega, Parity::Odd, Rational(1, 2), omega},
        {Name::Dil, Parity::Even, Rational(0), dil},
        {Name::Xi, Parity::Odd, Rational(-1, 2), xi},
        {Name::K, Parity::Even, Rational(-1), k},
    }};
}

/// Distinct term weights of an operator matrix; homogeneous iff exactly one.
struct ScalingResult
{
    std::set<Rational> weights;

    bool homogeneous() const { return weights.size() == 1; }
    Rational value() const
    {
        if (!homogeneous()) throw std::logic_error("scaling dimension: operator is not homogeneous");
        return *weights.begin();
    }
};

/// Weights [t] = -1, [dt] = +1, [x] = -1/2, [dx] = +1/2, [g] = [lambda] = 0,
/// plus w_col - w_row on the first tensor factor with w = (0, 1/2), which
/// gives [Q] = +1/2, [Lambda] = 0, [R] = -1/2. The zero matrix has no weight.
inline ScalingResult scaling_dimension(const OpMatrix& a)
{
    if (a.size() != 4) throw std::invalid_argument("scaling_dimension: expected a 4x4 operator");
    const Rational position[2] = {Rational(0), Rational(1, 2)};
    ScalingResult out;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            for (const auto& [m, coeff] : a(r, c).terms()) {
                if (m.fn.has_f()) throw std::invalid_argument("scaling_dimension: prepotential symbols carry no weight");
                if (m.d.dx.size() > 1) throw std::invalid_argument("scaling_dimension: only one spatial direction");
                Rational w = Rational(-m.fn.t) + Rational(-m.fn.x, 2) + Rational(m.d.dt) + Rational(m.d.dx_power(1), 2);
                w += position[c / 2] - position[r / 2];
                out.weights.insert(w);
            }
    return out;
}

/// Anticommutator for two odd generators, commutator otherwise.
inline OpMatrix graded_bracket(const Generator& a, const Generator& b)
{
    if (a.parity == Parity::Odd && b.parity == Parity::Odd) return anticommutator(a.body, b.body);
    return commutator(a.body, b.body);
}

using Coefficients = std::array<GaussRational, 5>;

namespace detail {

using Coordinate = std::tuple<std::size_t, Monomial, SymbolPowers>;
using Vector = std::map<Coordinate, GaussRational>;

inline Vector flatten(const OpMatrix& m)
{
    Vector v;
    for (std::size_t e = 0; e < m.entries().size(); ++e)
        for (const auto& [mono, coeff] : m.entries()[e].terms())
            for (const auto& [powers, value] : coeff.terms()) v.emplace(Coordinate{e, mono, powers}, value);
    return v;
}

} // namespace detail

inline OpMatrix combination(const Generators& gens, const Coefficients& c)
{
    OpMatrix out(4);
    for (std::size_t k = 0; k < 5; ++k)
        if (!c[k].is_zero()) out += gens[k].body.times(OperatorPoly(c[k]));
    return out;
}

/// Exact numeric coefficients of `value` in span{H, Omega, Dil, Xi, K};
/// nullopt when no constant combination reproduces it.
inline std::optional<Coefficients> expand_in_span(const Generators& gens, const OpMatrix& value)
{
    std::vector<detail::Vector> cols;
    for (const auto& g : gens) cols.push_back(detail::flatten(g.body));
    auto sol = solve_in_span(cols, detail::flatten(value));
    if (!sol) return std::nullopt;
    Coefficients c;
    for (std::size_t k = 0; k < 5; ++k) c[k] = (*sol)[k];
    if (!(combination(gens, c) == value)) return std::nullopt;
    return c;
}

/// Renders a coefficient vector as "-1/2*Omega + 2*Dil"; "0" if all vanish.
inline std::string expansion_text(const Coefficients& c)
{
    std::string out;
    for (std::size_t k = 0; k < 5; ++k) {
        if (c[k].is_zero()) continue;
        auto [sign, number] = lleq::detail::signed_number(c[k]);
        const std::string body = lleq::detail::product_text(number, to_string(static_cast<Name>(k)));
        if (out.empty()) out = (sign < 0 ? "-" : "") + body;
        else out += (sign < 0 ? " - " : " + ") + body;
    }
    return out.empty() ? "0" : out;
}

enum class Source { Reference, Computed, Trivial };

struct BracketEntry
{
    Name left;
    Name right;
    std::string label;                  ///< "[Dil, H]" or "{Omega, Xi}"
    OpMatrix value;
    std::optional<Coefficients> computed;
    std::optional<Coefficients> expected; ///< set for Reference and Trivial rows
    Source source = Source::Computed;

    OpMatrix residual; ///< value minus the expected combination; zero when none is expected

    bool closed() const { return computed.has_value(); }
    bool matches() const { return closed() && (!expected || *computed == *expected); }
};

struct BracketTable
{
    std::vector<BracketEntry> rows;

    bool all_closed() const
    {
        for (const auto& r : rows) if (!r.closed()) return false;
        return true;
    }
    bool all_match() const
    {
        for (const auto& r : rows) if (!r.matches()) return false;
        return true;
    }
    const BracketEntry& find(Name a, Name b) const
    {
        for (const auto& r : rows)
            if (r.left == a && r.right == b) return r;
        throw std::out_of_range("bracket not in table");
    }
};

inline Coefficients single(Name n, GaussRational c)
{
    Coefficients out{};
    out[static_cast<std::size_t>(n)] = c;
    return out;
}

/// All 15 graded brackets, each expanded in the generator span. Ten carry the
/// reference values; [K, Omega] and [H, Xi] are computed only; the three even
/// self-brackets are trivially zero.
inline BracketTable verify_closure(const Generators& gens)
{
    using N = Name;
    struct Spec
    {
        N a, b;
        Source source;
        Coefficients expected;
    };
    const Rational half(1, 2);
    const std::vector<Spec> specs = {
        {N::Dil, N::H, Source::Reference, single(N::H, -1)},
        {N::Dil, N::K, Source::Reference, single(N::K, 1)},
        {N::H, N::K, Source::Reference, single(N::Dil, 2)},
        {N::Dil, N::Omega, Source::Reference, single(N::Omega, GaussRational(-half))},
        {N::Dil, N::Xi, Source::Reference, single(N::Xi, GaussRational(half))},
        {N::H, N::Omega, Source::Reference, Coefficients{}},
        {N::K, N::Omega, Source::Computed, {}},
        {N::H, N::Xi, Source::Computed, {}},
        {N::K, N::Xi, Source::Reference, Coefficients{}},
        {N::Omega, N::Omega, Source::Reference, single(N::H, 2)},
        {N::Omega, N::Xi, Source::Reference, single(N::Dil, 2)},
        {N::Xi, N::Xi, Source::Reference, single(N::K, 2)},
        {N::H, N::H, Source::Trivial, Coefficients{}},
        {N::Dil, N::Dil, Source::Trivial, Coefficients{}},
        {N::K, N::K, Source::Trivial, Coefficients{}},
    };
    BracketTable table;
    for (const auto& s : specs) {
        const Generator& a = gens[static_cast<std::size_t>(s.a)];
        const Generator& b = gens[static_cast<std::size_t>(s.b)];
        const bool anti = a.parity == Parity::Odd && b.parity == Parity::Odd;
        BracketEntry e{s.a, s.b,
                       std::string(anti ? "{" : "[") + to_string(s.a) + ", " + to_string(s.b) + (anti ? "}" : "]"),
                       graded_bracket(a, b), std::nullopt, std::nullopt, s.source, OpMatrix(4)};
        e.computed = expand_in_span(gens, e.value);
        if (s.source != Source::Computed) {
            e.expected = s.expected;
            e.residual = e.value - combination(gens, s.expected);
        }
        table.rows.push_back(std::move(e));
    }
    return table;
}

inline BracketTable verify_closure(const Parameters& params = {}) { return verify_closure(build_generators(params)); }

inline int parity_sign(const Generator& a, const Generator& b)
{
    return a.parity == Parity::Odd && b.parity == Parity::Odd ? -1 : 1;
}

/// (-1)^{|a||c|} [a,[b,c]} + (-1)^{|b||a|} [b,[c,a]} + (-1)^{|c||b|} [c,[a,b]}.
inline OpMatrix graded_jacobi(const Generator& a, const Generator& b, const Generator& c)
{
    auto bracket = [](const Generator& x, Parity py, const OpMatrix& y) {
        if (x.parity == Parity::Odd && py == Parity::Odd) return anticommutator(x.body, y);
        return commutator(x.body, y);
    };
    auto sum_parity = [](Parity p, Parity q) { return p == q ? Parity::Even : Parity::Odd; };
    auto term = [&](const Generator& x, const Generator& y, const Generator& z) {
        const Generator inner{Name::H, sum_parity(y.parity, z.parity), Rational(0), graded_bracket(y, z)};
        return bracket(x, inner.parity, inner.body);
    };
    OpMatrix total = term(a, b, c).times(OperatorPoly(parity_sign(a, c)));
    total += term(b, c, a).times(OperatorPoly(parity_sign(b, a)));
    total += term(c, a, b).times(OperatorPoly(parity_sign(c, b)));
    return total;
}

/// Left part 1 * i dt and Hamiltonian 1 (-dx^2 + g^2/x^2) - (I x X) g/x^2.
struct HamiltonianSplit
{
    OpMatrix left;
    OpMatrix hamiltonian;
};

inline HamiltonianSplit hamiltonian_split()
{
    using P = OperatorPoly;
    const P g = P::g();
    const OpMatrix one = OpMatrix::identity(4);
    return {one.times(P::i() * P::dt()),
            one.times(-P::dx(1, 2) + g * g * P::x(-2)) - word_matrix("IX").times(g * P::x(-2))};
}

} // namespace lleq::osp12

#endif // LLEQ_OSP12_HPP
