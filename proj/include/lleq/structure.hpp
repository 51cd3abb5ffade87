#ifndef LLEQ_STRUCTURE_HPP
#define LLEQ_STRUCTURE_HPP

#include "lleq/word.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lleq {

/// Basis of {S : S g = g S for every input g}, over the rationals.
struct CommutantBasis
{
    std::size_t n = 0;
    std::vector<Matrix<Rational>> elements;

    std::size_t dimension() const { return elements.size(); }
};

namespace detail {

inline std::size_t unknown(std::size_t n, std::size_t i, std::size_t j) { return i * n + j; }

} // namespace detail

/// Solves S g - g S = 0 for all inputs (n^2 unknowns) by exact sparse
/// elimination. Every returned element is re-verified by multiplication.
inline CommutantBasis commutant_basis(const std::vector<Matrix<Rational>>& mats)
{
    if (mats.empty()) throw std::invalid_argument("commutant_basis: empty input list");
    const std::size_t n = mats.front().rows();
    for (const auto& m : mats)
        if (m.rows() != n || m.cols() != n) throw std::invalid_argument("commutant_basis: matrices must all be n x n");

    Echelon<Rational> ech(n * n);
    for (const auto& g : mats) {
        // (S g)_ij = sum_k S_ik g_kj ; (g S)_ij = sum_k g_ik S_kj
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                SparseRow<Rational> row;
                auto add = [&row](std::size_t col, const Rational& v) {
                    auto [it, inserted] = row.try_emplace(col, v);
                    if (!inserted) {
                        it->second += v;
                        if (it->second == 0) row.erase(it);
                    }
                };
                for (std::size_t k = 0; k < n; ++k) {
                    if (g(k, j) != 0) add(detail::unknown(n, i, k), g(k, j));
                    if (g(i, k) != 0) add(detail::unknown(n, k, j), -g(i, k));
                }
                if (!row.empty()) ech.insert(std::move(row));
            }
    }

    CommutantBasis basis{n, {}};
    for (const auto& v : ech.nullspace()) {
        Matrix<Rational> s(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) s(i, j) = v[detail::unknown(n, i, j)];
        for (const auto& g : mats)
            if (!(s * g - g * s).is_zero()) throw std::logic_error("commutant_basis: solver returned a non-commuting element");
        basis.elements.push_back(std::move(s));
    }
    return basis;
}

/// Q W -> (Y W, A W). A constant matrix commutes with the operator Q W iff it
/// commutes with both, since Q = (Y + A)/2 + i*dt (Y - A)/2.
inline std::pair<Word, Word> expand_time_word(const Word& w)
{
    if (!w.has_q()) throw std::invalid_argument("expand_time_word: word '" + w.str() + "' has no Q");
    return {w.with(0, Letter::Y), w.with(0, Letter::A)};
}

/// Coefficients of m in the basis of constant words: c_w = tr(w^T m) / n.
inline std::vector<std::pair<Word, Rational>> word_decomposition(const Matrix<Rational>& m)
{
    const std::size_t n = m.rows();
    std::size_t k = 0;
    while ((std::size_t{1} << k) < n) ++k;
    if ((std::size_t{1} << k) != n || n < 2) throw std::invalid_argument("word_decomposition: size must be 2^k, k >= 1");
    std::vector<std::pair<Word, Rational>> out;
    for (const auto& w : all_constant_words(k)) {
        const SignedPermutation p = signed_permutation(w);
        Rational c = 0;
        for (std::size_t i = 0; i < n; ++i) c += p.sign[i] * m(i, p.col[i]);
        if (c != 0) out.emplace_back(w, c / Rational(n));
    }
    return out;
}

/// Per-slot order I < X < Y < A, used to list witness words.
inline bool word_less(const Word& a, const Word& b)
{
    auto rank = [](Letter l) {
        switch (l) {
        case Letter::I: return 0;
        case Letter::X: return 1;
        case Letter::Y: return 2;
        case Letter::A: return 3;
        case Letter::Q: return 4;
        }
        return 5;
    };
    return std::lexicographical_compare(a.letters().begin(), a.letters().end(), b.letters().begin(),
                                        b.letters().end(), [&](Letter x, Letter y) { return rank(x) < rank(y); });
}

/// When the commutant is spanned by constant words (always the case for
/// word inputs), returns those words, identity first. nullopt otherwise.
inline std::optional<std::vector<Word>> word_basis(const CommutantBasis& basis)
{
    if (basis.n < 2 || (basis.n & (basis.n - 1)) != 0) return std::nullopt;
    std::vector<Word> words;
    for (const auto& e : basis.elements)
        for (const auto& [w, c] : word_decomposition(e))
            if (std::find(words.begin(), words.end(), w) == words.end()) words.push_back(w);
    if (words.size() != basis.dimension()) return std::nullopt;
    std::sort(words.begin(), words.end(), word_less);
    return words;
}

enum class DivisionAlgebra { R, C, H };

inline const char* to_string(DivisionAlgebra d)
{
    switch (d) {
    case DivisionAlgebra::R: return "R";
    case DivisionAlgebra::C: return "C";
    case DivisionAlgebra::H: return "H";
    }
    return "?";
}

struct Witness
{
    Matrix<Rational> matrix;
    std::optional<Word> word; ///< set when the witness is exactly a constant word
};

struct DivisionAlgebraTag
{
    DivisionAlgebra kind = DivisionAlgebra::R;
    std::vector<Witness> witnesses; ///< J for C; J1, J2, J3 for H
    /// For H: sign[i][j] = s with J_i J_j = s J_k (i != j, k the third index).
    std::array<std::array<int, 3>, 3> quaternion_signs{};
};

/// Either a tag or a diagnostic explaining why no R/C/H structure was found.
struct DivisionAlgebraResult
{
    std::optional<DivisionAlgebraTag> tag;
    std::string diagnostic;

    explicit operator bool() const { return tag.has_value(); }
};

namespace detail {

inline bool proportional_to_identity(const Matrix<Rational>& m)
{
    const Rational d = m(0, 0);
    return (m - d * Matrix<Rational>::identity(m.rows())).is_zero();
}

/// Rational square root if r is a perfect square of a rational.
inline std::optional<Rational> rational_sqrt(const Rational& r)
{
    if (r < 0) return std::nullopt;
    const Integer num = boost::multiprecision::numerator(r), den = boost::multiprecision::denominator(r);
    const Integer sn = boost::multiprecision::sqrt(num), sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return Rational(sn, sd);
}

/// Traceless part of m, scaled so that J^2 = -identity when possible.
inline std::optional<Matrix<Rational>> complex_unit(const Matrix<Rational>& m)
{
    const std::size_t n = m.rows();
    Matrix<Rational> j = m - (m.trace() / Rational(n)) * Matrix<Rational>::identity(n);
    if (j.is_zero()) return std::nullopt;
    const Matrix<Rational> sq = j * j;
    if (!proportional_to_identity(sq)) return std::nullopt;
    const Rational c = sq(0, 0);
    if (c >= 0) return std::nullopt;
    auto root = rational_sqrt(-c);
    if (!root) return std::nullopt;
    return (Rational(1) / *root) * j;
}

inline Witness make_witness(Matrix<Rational> m)
{
    Witness w{std::move(m), std::nullopt};
    if (auto match = match_word(w.matrix); match && match->first == 1) w.word = match->second;
    return w;
}

} // namespace detail

/// dim 1 -> R; dim 2 -> C with J^2 = -1; dim 4 -> H with J_i^2 = -1 and
/// J_i J_j = +-J_k. Anything else yields a diagnostic, never a throw.
inline DivisionAlgebraResult classify_division_algebra(const CommutantBasis& basis)
{
    const std::size_t dim = basis.dimension();
    const std::size_t n = basis.n;
    const auto id = Matrix<Rational>::identity(n);

    // candidate traceless generators: non-identity words if available
    std::vector<Matrix<Rational>> candidates;
    if (auto words = word_basis(basis)) {
        for (const auto& w : *words)
            if (w != Word::identity(w.size())) candidates.push_back(constant_matrix(w));
    } else {
        for (const auto& e : basis.elements)
            if (!detail::proportional_to_identity(e)) candidates.push_back(e);
    }

    switch (dim) {
    case 1:
        if (!detail::proportional_to_identity(basis.elements.front()))
            return {std::nullopt, "dimension 1 but basis element is not proportional to the identity"};
        return {DivisionAlgebraTag{DivisionAlgebra::R, {}, {}}, {}};
    case 2: {
        if (candidates.empty()) return {std::nullopt, "dimension 2 without a non-scalar element"};
        const Matrix<Rational> t = candidates.front() - (candidates.front().trace() / Rational(n)) * id;
        const Matrix<Rational> sq = t * t;
        if (detail::proportional_to_identity(sq) && sq(0, 0) > 0)
            return {std::nullopt, "reducible/split representation: traceless element squares to +identity"};
        auto j = detail::complex_unit(candidates.front());
        if (!j) return {std::nullopt, "dimension 2 but no element squares to a negative multiple of the identity"};
        return {DivisionAlgebraTag{DivisionAlgebra::C, {detail::make_witness(*j)}, {}}, {}};
    }
    case 4: {
        if (candidates.size() < 3) return {std::nullopt, "dimension 4 with fewer than three non-scalar elements"};
        std::vector<Matrix<Rational>> js;
        for (std::size_t k = 0; k < 3; ++k) {
            auto j = detail::complex_unit(candidates[k]);
            if (!j) return {std::nullopt, "dimension 4 but a traceless element does not square to -identity: not quaternionic"};
            js.push_back(std::move(*j));
        }
        DivisionAlgebraTag tag{DivisionAlgebra::H, {}, {}};
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b) {
                if (a == b) continue;
                const std::size_t c = 3 - a - b;
                const Matrix<Rational> prod = js[a] * js[b];
                if (prod == js[c]) tag.quaternion_signs[a][b] = 1;
                else if (prod == -js[c]) tag.quaternion_signs[a][b] = -1;
                else return {std::nullopt, "dimension 4 but J_i J_j is not +-J_k: not quaternionic"};
            }
        for (auto& j : js) tag.witnesses.push_back(detail::make_witness(std::move(j)));
        return {tag, {}};
    }
    default:
        return {std::nullopt, "commutant dimension " + std::to_string(dim) + " is not 1, 2 or 4"};
    }
}

/// Products of basis elements stay in the span (exact linear solve).
inline bool is_closed_under_product(const CommutantBasis& basis)
{
    auto flat = [](const Matrix<Rational>& m) {
        std::map<std::size_t, Rational> v;
        for (std::size_t k = 0; k < m.data().size(); ++k)
            if (m.data()[k] != 0) v.emplace(k, m.data()[k]);
        return v;
    };
    std::vector<std::map<std::size_t, Rational>> cols;
    for (const auto& e : basis.elements) cols.push_back(flat(e));
    for (const auto& a : basis.elements)
        for (const auto& b : basis.elements)
            if (!solve_in_span(cols, flat(a * b))) return false;
    return true;
}

/// Identity lies in the span of the basis.
inline bool contains_identity(const CommutantBasis& basis)
{
    std::vector<std::map<std::size_t, Rational>> cols;
    for (const auto& e : basis.elements) {
        std::map<std::size_t, Rational> v;
        for (std::size_t k = 0; k < e.data().size(); ++k)
            if (e.data()[k] != 0) v.emplace(k, e.data()[k]);
        cols.push_back(std::move(v));
    }
    std::map<std::size_t, Rational> id;
    for (std::size_t k = 0; k < basis.n; ++k) id.emplace(k * basis.n + k, Rational(1));
    return solve_in_span(cols, id).has_value();
}

} // namespace lleq

#endif // LLEQ_STRUCTURE_HPP
