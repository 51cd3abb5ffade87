#ifndef LLEQ_TESTS_ORACLES_HPP
#define LLEQ_TESTS_ORACLES_HPP

// Brute-force reference computations, deliberately independent of the library:
// dense integer matrices built from the letter tables by explicit Kronecker
// products, and fraction-free rank computations.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial in one commuting symbol s, standing for i*dt.
using SPoly = std::map<int, long long>;

inline SPoly add(SPoly a, const SPoly& b, long long sign = 1)
{
    for (const auto& [k, v] : b) {
        a[k] += sign * v;
        if (a[k] == 0) a.erase(k);
    }
    return a;
}

inline SPoly mul(const SPoly& a, const SPoly& b)
{
    SPoly out;
    for (const auto& [ka, va] : a)
        for (const auto& [kb, vb] : b) {
            out[ka + kb] += va * vb;
            if (out[ka + kb] == 0) out.erase(ka + kb);
        }
    return out;
}

struct PolyMatrix
{
    std::size_t n = 0;
    std::vector<SPoly> e;

    explicit PolyMatrix(std::size_t size = 0) : n(size), e(size * size) {}
    SPoly& at(std::size_t r, std::size_t c) { return e[r * n + c]; }
    const SPoly& at(std::size_t r, std::size_t c) const { return e[r * n + c]; }
    bool operator==(const PolyMatrix&) const = default;
};

inline PolyMatrix letter(char c)
{
    PolyMatrix m(2);
    auto set = [&](std::size_t r, std::size_t col, long long v, int power = 0) { m.at(r, col) = SPoly{{power, v}}; };
    switch (c) {
    case 'X': set(0, 0, 1); set(1, 1, -1); break;
    case 'Y': set(0, 1, 1); set(1, 0, 1); break;
    case 'A': set(0, 1, 1); set(1, 0, -1); break;
    case 'I': set(0, 0, 1); set(1, 1, 1); break;
    case 'Q': set(0, 1, 1); set(1, 0, 1, 1); break;
    default: throw std::invalid_argument(std::string("oracle: bad letter ") + c);
    }
    return m;
}

inline PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b)
{
    PolyMatrix out(a.n * b.n);
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = 0; j < a.n; ++j)
            for (std::size_t k = 0; k < b.n; ++k)
                for (std::size_t l = 0; l < b.n; ++l) out.at(i * b.n + k, j * b.n + l) = mul(a.at(i, j), b.at(k, l));
    return out;
}

inline PolyMatrix word(const std::string& w)
{
    PolyMatrix m = letter(w.at(0));
    for (std::size_t k = 1; k < w.size(); ++k) m = kron(m, letter(w[k]));
    return m;
}

inline PolyMatrix product(const PolyMatrix& a, const PolyMatrix& b)
{
    PolyMatrix out(a.n);
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = 0; j < a.n; ++j)
            for (std::size_t k = 0; k < a.n; ++k) out.at(i, j) = add(out.at(i, j), mul(a.at(i, k), b.at(k, j)));
    return out;
}

inline PolyMatrix negate(PolyMatrix a)
{
    for (auto& p : a.e)
        for (auto& [k, v] : p) v = -v;
    return a;
}

/// "commute", "anticommute" or "neither" from the two products directly.
inline std::string relation(const std::string& u, const std::string& v)
{
    const PolyMatrix a = word(u), b = word(v);
    const PolyMatrix ab = product(a, b), ba = product(b, a);
    if (ab == ba) return "commute";
    if (ab == negate(ba)) return "anticommute";
    return "neither";
}

/// Integer entries of a constant word.
inline std::vector<std::vector<long long>> constant(const std::string& w)
{
    const PolyMatrix m = word(w);
    std::vector<std::vector<long long>> out(m.n, std::vector<long long>(m.n, 0));
    for (std::size_t r = 0; r < m.n; ++r)
        for (std::size_t c = 0; c < m.n; ++c) {
            const auto& p = m.at(r, c);
            if (p.empty()) continue;
            if (p.size() != 1 || p.begin()->first != 0) throw std::invalid_argument("oracle: word is not constant");
            out[r][c] = p.begin()->second;
        }
    return out;
}

/// Rank over Q by Bareiss fraction-free elimination on big integers.
inline std::size_t bareiss_rank(std::vector<std::vector<BigInt>> m)
{
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    BigInt prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t k = c + 1; k < cols; ++k) m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]) / prev;
            m[r][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }
    return rank;
}

/// Rank modulo a 61-bit prime; a lower bound for the rank over Q.
inline std::size_t modular_rank(std::vector<std::vector<long long>> m)
{
    using u128 = unsigned __int128;
    constexpr std::uint64_t p = (std::uint64_t{1} << 61) - 1;
    auto norm = [&](long long v) { return static_cast<std::uint64_t>(((v % static_cast<long long>(p)) + p) % p); };
    auto mulmod = [&](std::uint64_t a, std::uint64_t b) { return static_cast<std::uint64_t>((u128(a) * b) % p); };
    auto powmod = [&](std::uint64_t a, std::uint64_t e) {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return r;
    };
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = norm(m[r][c]);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        const std::uint64_t inv = powmod(a[rank][c], p - 2);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (a[r][c] == 0) continue;
            const std::uint64_t f = mulmod(a[r][c], inv);
            for (std::size_t k = c; k < cols; ++k) a[r][k] = (a[r][k] + p - mulmod(f, a[rank][k])) % p;
        }
        ++rank;
    }
    return rank;
}

/// Linear equations G X - X G = 0 on the n*n entries of X, one block per word.
inline std::vector<std::vector<long long>> commutant_equations(const std::vector<std::string>& words)
{
    std::vector<std::vector<long long>> eqs;
    for (const auto& w : words) {
        const auto g = constant(w);
        const std::size_t n = g.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<long long> row(n * n, 0);
                for (std::size_t k = 0; k < n; ++k) {
                    row[k * n + j] += g[i][k];
                    row[i * n + k] -= g[k][j];
                }
                bool nonzero = false;
                for (long long v : row) nonzero = nonzero || v != 0;
                if (nonzero) eqs.push_back(std::move(row));
            }
    }
    return eqs;
}

inline std::size_t word_size(const std::vector<std::string>& words) { return std::size_t{1} << words.at(0).size(); }

/// Exact commutant dimension via Bareiss rank.
inline std::size_t commutant_dimension(const std::vector<std::string>& words)
{
    const std::size_t n = word_size(words);
    auto eqs = commutant_equations(words);
    std::vector<std::vector<BigInt>> big;
    for (const auto& r : eqs) {
        std::vector<BigInt> b(r.begin(), r.end());
        big.push_back(std::move(b));
    }
    return n * n - bareiss_rank(std::move(big));
}

/// Commutant dimension via rank mod p: an upper bound that is exact unless p
/// divides a maximal minor.
inline std::size_t commutant_dimension_modp(const std::vector<std::string>& words)
{
    const std::size_t n = word_size(words);
    return n * n - modular_rank(commutant_equations(words));
}

/// All words over XYAI of the given length, in lexicographic order of "XYAI".
inline std::vector<std::string> constant_words(std::size_t length)
{
    std::vector<std::string> out{""};
    for (std::size_t k = 0; k < length; ++k) {
        std::vector<std::string> next;
        for (const auto& w : out)
            for (char c : std::string("XYAI")) next.push_back(w + c);
        out = std::move(next);
    }
    return out;
}

} // namespace oracle

#endif // LLEQ_TESTS_ORACLES_HPP
