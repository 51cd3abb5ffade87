#ifndef LLEQ_CLIFFORD_HPP
#define LLEQ_CLIFFORD_HPP

#include "lleq/word.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lleq {

/// p generators square to +1, q to -1.
struct Signature
{
    int p = 0;
    int q = 0;
    bool operator==(const Signature&) const = default;
};

inline std::string to_string(const Signature& s)
{
    return "(" + std::to_string(s.p) + "," + std::to_string(s.q) + ")";
}

/// Constant words meant to satisfy {g_i, g_j} = 2 eta_ij, eta having p entries
/// +1 and q entries -1. Generators may appear in any order.
struct CliffordSet
{
    std::vector<Word> generators;
    Signature signature;
};

struct RelationCheck
{
    std::size_t i = 0;
    std::size_t j = 0;
    bool passed = false;
    std::string detail;
};

struct CliffordReport
{
    std::vector<RelationCheck> checks;
    std::size_t relations() const { return checks.size(); }
    bool passed() const
    {
        for (const auto& c : checks) if (!c.passed) return false;
        return !checks.empty();
    }
    std::vector<RelationCheck> failures() const
    {
        std::vector<RelationCheck> out;
        for (const auto& c : checks) if (!c.passed) out.push_back(c);
        return out;
    }
};

/// Checks every square against the claimed signature and every pair for
/// anticommutation: (p+q)(p+q+1)/2 relations. Squares are matched against eta
/// in list order: a generator fails once its sign's budget (p or q) is used up.
inline CliffordReport verify_clifford(const CliffordSet& s)
{
    CliffordReport report;
    const auto& g = s.generators;
    const std::size_t expected = static_cast<std::size_t>(s.signature.p + s.signature.q);
    if (g.size() != expected) {
        report.checks.push_back({0, 0, false,
                                 "generator count " + std::to_string(g.size()) + " does not match signature " +
                                     to_string(s.signature)});
        return report;
    }
    int positive_left = s.signature.p, negative_left = s.signature.q;
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i; j < g.size(); ++j) {
            RelationCheck c{i, j, false, {}};
            if (g[i].size() != g[j].size() || !g[i].is_constant() || !g[j].is_constant()) {
                c.detail = "words " + g[i].str() + ", " + g[j].str() + " are not equal-length constant words";
            } else if (i == j) {
                const int got = square_sign(g[i]);
                int& budget = got > 0 ? positive_left : negative_left;
                c.passed = budget > 0;
                if (c.passed) --budget;
                c.detail = g[i].str() + "^2 = " + (got > 0 ? "+1" : "-1") +
                           (c.passed ? "" : ", but signature " + to_string(s.signature) + " has no such entry left");
            } else {
                const Matrix<Rational> a = constant_matrix(g[i]), b = constant_matrix(g[j]);
                c.passed = (a * b + b * a).is_zero();
                c.detail = "{" + g[i].str() + ", " + g[j].str() + "} " + (c.passed ? "= 0" : "!= 0");
            }
            report.checks.push_back(std::move(c));
        }
    }
    return report;
}

/// Cl(2,1) = {X, Y, A}.
inline CliffordSet base_set() { return {{Word("X"), Word("Y"), Word("A")}, {2, 1}}; }

/// Cl(p,q) -> Cl(p+1,q+1): prefix X to every generator, then append Y I^k
/// and A I^k.
inline CliffordSet extend(const CliffordSet& s)
{
    if (!verify_clifford(s).passed()) throw std::invalid_argument("extend: input set fails the Clifford relations");
    const std::size_t k = s.generators.front().size();
    CliffordSet out{{}, {s.signature.p + 1, s.signature.q + 1}};
    for (const auto& g : s.generators) out.generators.emplace_back("X" + g.str());
    out.generators.emplace_back("Y" + std::string(k, 'I'));
    out.generators.emplace_back("A" + std::string(k, 'I'));
    return out;
}

/// Wraps constant words, reading the signature off their squares.
inline CliffordSet make_clifford_set(const std::vector<Word>& words)
{
    CliffordSet s{words, {}};
    for (const auto& w : words) ++(square_sign(w) > 0 ? s.signature.p : s.signature.q);
    return s;
}

/// Named word sets: "Cl(2,1)", "Cl(3,2)", "Cl(4,3)-set1", "Cl(4,3)-set2".
inline std::map<std::string, CliffordSet> clifford_catalog()
{
    return {
        {"Cl(2,1)", make_clifford_set({"X", "Y", "A"})},
        {"Cl(3,2)", make_clifford_set({"XX", "XY", "XA", "YI", "AI"})},
        {"Cl(4,3)-set1", make_clifford_set({"XXX", "XXY", "XXA", "XYI", "XAI", "YII", "AII"})},
        {"Cl(4,3)-set2", make_clifford_set({"XYX", "XYY", "XYA", "XXI", "XAI", "YII", "AII"})},
    };
}

/// Extends a set of pairwise anticommuting constant words of length m to a
/// full Cl(m+1, m) word set (2m+1 generators). The search is a deterministic
/// depth-first scan over constant words; nullopt if no completion exists.
inline std::optional<CliffordSet> complete_to_tower(const std::vector<Word>& seed)
{
    if (seed.empty()) throw std::invalid_argument("complete_to_tower: empty seed");
    const std::size_t m = seed.front().size();
    const int want_p = static_cast<int>(m) + 1, want_q = static_cast<int>(m);
    for (std::size_t i = 0; i < seed.size(); ++i)
        for (std::size_t j = i + 1; j < seed.size(); ++j)
            if (pair_relation(seed[i], seed[j]) != PairRelation::Anticommute) return std::nullopt;

    const std::vector<Word> candidates = all_constant_words(m);
    std::vector<Word> current = seed;
    auto count = [&](int sign) {
        int c = 0;
        for (const auto& w : current) c += square_sign(w) == sign;
        return c;
    };
    // candidate index lower bound enforces increasing order of added words
    auto search = [&](auto&& self, std::size_t from) -> bool {
        if (count(1) > want_p || count(-1) > want_q) return false;
        if (current.size() == 2 * m + 1) return true;
        for (std::size_t c = from; c < candidates.size(); ++c) {
            const Word& w = candidates[c];
            bool ok = true;
            for (const auto& existing : current)
                if (pair_relation(w, existing) != PairRelation::Anticommute) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            current.push_back(w);
            if (self(self, c + 1)) return true;
            current.pop_back();
        }
        return false;
    };
    if (!search(search, 0)) return std::nullopt;
    return make_clifford_set(current);
}

} // namespace lleq

#endif // LLEQ_CLIFFORD_HPP
