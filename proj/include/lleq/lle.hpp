#ifndef LLEQ_LLE_HPP
#define LLEQ_LLE_HPP

#include "lleq/clifford.hpp"
#include "lleq/structure.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lleq {

/// A potential contribution word * fn(x) subtracted from the operator.
struct PotentialTerm
{
    Word word;
    OperatorPoly fn;
};

/// One Levy-Leblond equation T Psi = (sum_k S_k d_k + sum_j P_j f_j) Psi.
///
/// Construction enforces the structural rules only: equal word lengths, Q in
/// slot 1 of the time word, constant space and potential words, potentials
/// free of derivatives and of t. Algebraic requirements (anticommutation,
/// unit squares) are verification results, so broken equations can still be
/// built and diagnosed.
class LLESpec
{
public:
    LLESpec(std::string name, Word time, std::vector<Word> space, std::vector<PotentialTerm> potential = {})
        : name_(std::move(name)), time_(std::move(time)), space_(std::move(space)), potential_(std::move(potential))
    {
        if (!time_.has_q()) throw std::invalid_argument("LLE '" + name_ + "': time word '" + time_.str() + "' must start with Q");
        for (const auto& w : space_) {
            if (w.size() != time_.size())
                throw std::invalid_argument("LLE '" + name_ + "': space word '" + w.str() + "' has length " +
                                            std::to_string(w.size()) + ", time word has " + std::to_string(time_.size()));
            if (!w.is_constant()) throw std::invalid_argument("LLE '" + name_ + "': space word '" + w.str() + "' contains Q");
        }
        for (const auto& p : potential_) {
            if (p.word.size() != time_.size() || !p.word.is_constant())
                throw std::invalid_argument("LLE '" + name_ + "': potential word '" + p.word.str() +
                                            "' must be a constant word of the time word's length");
            if (p.fn.has_derivatives() || p.fn.has_t())
                throw std::invalid_argument("LLE '" + name_ + "': potential '" + to_string(p.fn) +
                                            "' must not contain derivatives or t");
        }
    }

    const std::string& name() const { return name_; }
    const Word& time_word() const { return time_; }
    const std::vector<Word>& space_words() const { return space_; }
    const std::vector<PotentialTerm>& potential() const { return potential_; }

    std::size_t word_length() const { return time_.size(); }
    std::size_t n() const { return std::size_t{1} << time_.size(); }
    std::size_t spatial_dims() const { return space_.size(); }
    bool is_free() const { return potential_.empty(); }

    /// Time word followed by the space words.
    std::vector<Word> words() const
    {
        std::vector<Word> all{time_};
        all.insert(all.end(), space_.begin(), space_.end());
        return all;
    }

private:
    std::string name_;
    Word time_;
    std::vector<Word> space_;
    std::vector<PotentialTerm> potential_;
};

/// One pass/fail entry; failing entries carry the exact nonzero residual.
struct CheckResult
{
    std::string name;
    bool passed = false;
    std::string detail;
    std::optional<OpMatrix> residual;
};

struct VerificationReport
{
    std::vector<CheckResult> checks;

    bool passed() const
    {
        for (const auto& c : checks) if (!c.passed) return false;
        return true;
    }
};

/// D = T - sum_k S_k d_k - sum_j P_j f_j; the equation is D Psi = 0.
inline OpMatrix build_operator(const LLESpec& spec)
{
    OpMatrix d = word_matrix(spec.time_word());
    for (std::size_t k = 0; k < spec.space_words().size(); ++k)
        d -= word_matrix(spec.space_words()[k]).times(OperatorPoly::dx(k + 1));
    for (const auto& p : spec.potential()) d -= word_matrix(p.word).times(p.fn);
    return d;
}

/// i*dt + sum_k d_k^2 for d spatial directions.
inline OperatorPoly free_schroedinger(std::size_t d)
{
    OperatorPoly s = OperatorPoly::i() * OperatorPoly::dt();
    for (std::size_t k = 1; k <= d; ++k) s += OperatorPoly::dx(k, 2);
    return s;
}

/// Pairwise relations among the time and space words must all be Anticommute,
/// and every space word must square to +identity.
inline VerificationReport verify_anticommutation(const LLESpec& spec)
{
    VerificationReport report;
    const auto words = spec.words();
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            const PairRelation r = pair_relation(words[i], words[j]);
            CheckResult c{"pair " + words[i].str() + "/" + words[j].str(), r == PairRelation::Anticommute, to_string(r), {}};
            if (!c.passed) {
                const OpMatrix a = word_matrix(words[i]), b = word_matrix(words[j]);
                c.residual = anticommutator(a, b);
            }
            report.checks.push_back(std::move(c));
        }
    for (const auto& w : spec.space_words()) {
        const int s = square_sign(w);
        CheckResult c{"square " + w.str(), s == 1, s == 1 ? "+1" : "-1", {}};
        if (!c.passed) c.residual = word_matrix(w) * word_matrix(w) - OpMatrix::identity(spec.n());
        report.checks.push_back(std::move(c));
    }
    return report;
}

/// D^2 == (i*dt + sum_k d_k^2) * identity, exactly.
inline VerificationReport verify_square_root(const LLESpec& spec)
{
    if (!spec.is_free()) throw std::invalid_argument("verify_square_root: '" + spec.name() + "' has potential terms");
    const OpMatrix d = build_operator(spec);
    const OpMatrix residual = d * d - OpMatrix::diagonal(spec.n(), free_schroedinger(spec.spatial_dims()));
    CheckResult c{"square root", residual.is_zero(),
                  "D^2 - (" + to_string(free_schroedinger(spec.spatial_dims())) + ")*1", {}};
    if (!c.passed) c.residual = residual;
    return {{std::move(c)}};
}

/// Smallest slot j >= 2 (1-based) where every word carries Y or A.
inline std::optional<std::size_t> weyl_slot(const LLESpec& spec)
{
    const auto words = spec.words();
    for (std::size_t slot = 1; slot < spec.word_length(); ++slot) {
        bool all = true;
        for (const auto& w : words)
            if (w[slot] != Letter::Y && w[slot] != Letter::A) {
                all = false;
                break;
            }
        if (all) return slot + 1;
    }
    return std::nullopt;
}

/// Constant words of the equation: Q W expanded to (Y W, A W), then space words.
inline std::vector<Word> expanded_system(const LLESpec& spec)
{
    auto [y, a] = expand_time_word(spec.time_word());
    std::vector<Word> out{y, a};
    out.insert(out.end(), spec.space_words().begin(), spec.space_words().end());
    return out;
}

inline std::vector<Matrix<Rational>> constant_matrices(const std::vector<Word>& words)
{
    std::vector<Matrix<Rational>> out;
    for (const auto& w : words) out.push_back(constant_matrix(w));
    return out;
}

/// Division-algebra structure of an equation.
///
/// Slots where every word has I are a multiplicity space. The remaining core
/// words are completed to a full Cl(m+1, m) word set, whose commutant is R.
/// One multiplicity slot carries C (acting through A), two carry H (acting
/// through IA, AX, AY). The ambient system is the completed core (I on the
/// multiplicity slots) plus the generators of the opposite action on the
/// multiplicity slots; its commutant is exactly the structure algebra.
struct AmbientSystem
{
    std::vector<std::size_t> multiplicity_slots; ///< 1-based
    CliffordSet core;                            ///< completed, on core slots only
    std::vector<Word> words;                     ///< full-length ambient words
};

class ClassificationError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

inline AmbientSystem ambient_system(const LLESpec& spec)
{
    const auto words = spec.words();
    const std::size_t len = spec.word_length();
    AmbientSystem amb;
    std::vector<std::size_t> core_slots{0};
    for (std::size_t slot = 1; slot < len; ++slot) {
        bool free = true;
        for (const auto& w : words) free = free && w[slot] == Letter::I;
        if (free) amb.multiplicity_slots.push_back(slot + 1);
        else core_slots.push_back(slot);
    }

    auto restrict = [&](const Word& w) {
        std::vector<Letter> letters;
        for (std::size_t s : core_slots) letters.push_back(w[s]);
        return Word(std::move(letters));
    };
    std::vector<Word> seed;
    for (const auto& w : expanded_system(spec)) seed.push_back(restrict(w));
    auto core = complete_to_tower(seed);
    if (!core)
        throw ClassificationError("'" + spec.name() + "': core words do not extend to a Cl(m+1,m) word set");
    amb.core = *core;

    auto embed = [&](const Word& core_word, const std::vector<Letter>& free_letters) {
        std::vector<Letter> letters(len, Letter::I);
        for (std::size_t k = 0; k < core_slots.size(); ++k) letters[core_slots[k]] = core_word[k];
        for (std::size_t k = 0; k < free_letters.size(); ++k) letters[amb.multiplicity_slots[k] - 1] = free_letters[k];
        return Word(std::move(letters));
    };
    for (const auto& g : amb.core.generators) amb.words.push_back(embed(g, {}));

    const Word core_identity = Word::identity(core_slots.size());
    using L = Letter;
    switch (amb.multiplicity_slots.size()) {
    case 0: break;
    case 1: amb.words.push_back(embed(core_identity, {L::A})); break;
    case 2:
        for (const auto& fl : std::vector<std::vector<Letter>>{{L::X, L::A}, {L::Y, L::A}, {L::A, L::I}})
            amb.words.push_back(embed(core_identity, fl));
        break;
    default:
        throw ClassificationError("'" + spec.name() + "': " + std::to_string(amb.multiplicity_slots.size()) +
                                  " identity-only slots; multiplicity beyond H is not classified");
    }
    return amb;
}

enum class SpinorType { M, MW, D, W, H };

inline const char* to_string(SpinorType t)
{
    switch (t) {
    case SpinorType::M: return "M";
    case SpinorType::MW: return "MW";
    case SpinorType::D: return "D";
    case SpinorType::W: return "W";
    case SpinorType::H: return "H";
    }
    return "?";
}

struct SpinorClass
{
    SpinorType type = SpinorType::M;
    std::size_t n = 0;
    std::size_t spatial_dims = 0;
    std::size_t real_components = 0;
    DivisionAlgebraTag division;
    bool chiral = false;
    std::optional<std::size_t> weyl;
    std::size_t structure_dim = 0; ///< commutant dimension of the ambient system
    std::size_t system_dim = 0;    ///< commutant dimension of the bare expanded words
    AmbientSystem ambient;

    /// "2", "4/2 = 2", "4C ≡ 8", "4H ≡ 16" followed by " real components".
    std::string components_text() const
    {
        const std::string n_str = std::to_string(n);
        switch (type) {
        case SpinorType::M: return n_str + " real components";
        case SpinorType::MW: return n_str + "/2 = " + std::to_string(n / 2) + " real components";
        case SpinorType::D: return std::to_string(n / 2) + "C ≡ " + n_str + " real components";
        case SpinorType::W: return std::to_string(n / 4) + "C ≡ " + std::to_string(n / 2) + " real components";
        case SpinorType::H: return std::to_string(n / 4) + "H ≡ " + n_str + " real components";
        }
        return {};
    }
};

inline SpinorType spinor_type(DivisionAlgebra d, bool chiral)
{
    switch (d) {
    case DivisionAlgebra::R: return chiral ? SpinorType::MW : SpinorType::M;
    case DivisionAlgebra::C: return chiral ? SpinorType::W : SpinorType::D;
    case DivisionAlgebra::H:
        if (chiral) throw ClassificationError("chiral quaternionic spinors have no type in the M/MW/D/W/H scheme");
        return SpinorType::H;
    }
    return SpinorType::M;
}

inline std::size_t real_components(SpinorType t, std::size_t n)
{
    return t == SpinorType::MW || t == SpinorType::W ? n / 2 : n;
}

inline SpinorClass classify(const LLESpec& spec)
{
    if (!spec.is_free()) throw std::invalid_argument("classify: '" + spec.name() + "' has potential terms");
    SpinorClass out;
    out.n = spec.n();
    out.spatial_dims = spec.spatial_dims();
    out.weyl = weyl_slot(spec);
    out.chiral = out.weyl.has_value();
    out.system_dim = commutant_basis(constant_matrices(expanded_system(spec))).dimension();
    out.ambient = ambient_system(spec);

    const CommutantBasis basis = commutant_basis(constant_matrices(out.ambient.words));
    out.structure_dim = basis.dimension();
    DivisionAlgebraResult r = classify_division_algebra(basis);
    if (!r) throw ClassificationError("'" + spec.name() + "': " + r.diagnostic);
    out.division = std::move(*r.tag);
    out.type = spinor_type(out.division.kind, out.chiral);
    out.real_components = real_components(out.type, out.n);
    return out;
}

/// Plane-wave symbol matrix of the operator at (E, k).
inline Matrix<GaussRational> symbol_matrix(const OpMatrix& op, const Rational& energy, const std::vector<Rational>& momentum)
{
    Matrix<GaussRational> m(op.size(), op.size());
    for (std::size_t r = 0; r < op.size(); ++r)
        for (std::size_t c = 0; c < op.size(); ++c)
            if (!op(r, c).is_zero()) m(r, c) = symbol_eval(op(r, c), energy, momentum).number();
    return m;
}

struct DispersionSample
{
    Rational energy;
    std::vector<Rational> momentum;
    GaussRational det;
};

inline Rational squared_norm(const std::vector<Rational>& k)
{
    Rational s = 0;
    for (const auto& v : k) s += v * v;
    return s;
}

inline GaussRational symbol_determinant(const LLESpec& spec, const Rational& energy, const std::vector<Rational>& momentum)
{
    return determinant(symbol_matrix(build_operator(spec), energy, momentum));
}

/// Deterministic momentum samples: k_j = (s + j) / (j + 1) style rationals.
inline std::vector<std::vector<Rational>> dispersion_momenta(std::size_t d, std::size_t count)
{
    std::vector<std::vector<Rational>> out;
    for (std::size_t s = 0; s < count; ++s) {
        std::vector<Rational> k;
        for (std::size_t j = 0; j < d; ++j) k.push_back(Rational(static_cast<int>(s + j + 1), static_cast<int>(j + 1)) * (s % 2 ? -1 : 1));
        out.push_back(std::move(k));
    }
    return out;
}

/// det(symbol(E, k)) = c (E - |k|^2)^(n/2) with |c| = 1, vanishing on shell.
inline VerificationReport dispersion_check(const LLESpec& spec, std::vector<DispersionSample>* samples_out = nullptr)
{
    if (!spec.is_free()) throw std::invalid_argument("dispersion_check: '" + spec.name() + "' has potential terms");
    const OpMatrix op = build_operator(spec);
    const std::size_t half = spec.n() / 2;
    const std::size_t count = std::max<std::size_t>(half + 2, 5);
    const auto momenta = dispersion_momenta(spec.spatial_dims(), count);
    const Rational offsets[] = {Rational(1), Rational(-2), Rational(1, 2), Rational(3), Rational(-1, 3)};

    VerificationReport report;
    std::vector<DispersionSample> on, off;
    for (std::size_t s = 0; s < count; ++s) {
        const Rational k2 = squared_norm(momenta[s]);
        on.push_back({k2, momenta[s], determinant(symbol_matrix(op, k2, momenta[s]))});
        const Rational e = k2 + offsets[s % 5] * Rational(static_cast<int>(s / 5 + 1));
        off.push_back({e, momenta[s], determinant(symbol_matrix(op, e, momenta[s]))});
    }

    bool on_ok = true;
    for (const auto& s : on) on_ok = on_ok && s.det.is_zero();
    report.checks.push_back({"on-shell zeros", on_ok, std::to_string(on.size()) + " samples with E = |k|^2", {}});

    bool off_ok = true;
    for (const auto& s : off) off_ok = off_ok && !s.det.is_zero();
    report.checks.push_back({"off-shell nonzero", off_ok, std::to_string(off.size()) + " samples with E != |k|^2", {}});

    auto model = [&](const DispersionSample& s) {
        GaussRational v(1);
        const GaussRational base(s.energy - squared_norm(s.momentum));
        for (std::size_t k = 0; k < half; ++k) v *= base;
        return v;
    };
    bool model_ok = off_ok;
    GaussRational c;
    if (off_ok) {
        c = off.front().det / model(off.front());
        model_ok = c.norm() == 1;
        for (const auto& s : off) model_ok = model_ok && s.det == c * model(s);
    }
    report.checks.push_back({"determinant model", model_ok,
                             "det = " + to_string(c) + " * (E - |k|^2)^" + std::to_string(half) + " at " +
                                 std::to_string(off.size()) + " samples",
                             {}});
    if (samples_out) {
        *samples_out = on;
        samples_out->insert(samples_out->end(), off.begin(), off.end());
    }
    return report;
}

/// The eleven free equations, keyed "eq6" .. "eq16".
inline std::vector<LLESpec> catalog()
{
    return {
        {"eq6", "Q", {"X"}},
        {"eq7", "QI", {"XX", "XY"}},
        {"eq8", "QY", {"XY"}},
        {"eq9", "QII", {"XXX", "XXY", "XYI"}},
        {"eq10", "QII", {"XYI"}},
        {"eq11", "QYI", {"XYX", "XYY"}},
        {"eq12", "QIII", {"XXXX", "XXXY", "XXYI", "XYII"}},
        {"eq13", "QIII", {"XXYI", "XYII"}},
        {"eq14", "QYII", {"XYXX", "XYXY", "XYYI"}},
        {"eq15", "QYII", {"XYYI"}},
        {"eq16", "QIII", {"XYII"}},
    };
}

inline std::optional<LLESpec> find_catalog(const std::string& key)
{
    for (auto& s : catalog())
        if (s.name() == key) return s;
    return std::nullopt;
}

struct TableRow
{
    std::string key;
    std::size_t n = 0;
    SpinorType type = SpinorType::M;
    std::size_t spatial_dims = 0;
    std::string components;

    /// "(8×8), D, (1+1), 4C ≡ 8 real components"
    std::string str() const
    {
        return "(" + std::to_string(n) + "×" + std::to_string(n) + "), " + to_string(type) + ", (1+" +
               std::to_string(spatial_dims) + "), " + components;
    }
};

inline TableRow table_row(const LLESpec& spec, const SpinorClass& cls)
{
    return {spec.name(), cls.n, cls.type, cls.spatial_dims, cls.components_text()};
}

/// Equation keys in the row order of the reference table.
inline std::vector<std::string> table_order()
{
    return {"eq6", "eq7", "eq8", "eq9", "eq11", "eq10", "eq12", "eq14", "eq13", "eq15", "eq16"};
}

/// Classification table over the catalog, in table order.
inline std::vector<TableRow> generate_table()
{
    std::vector<TableRow> rows;
    for (const auto& key : table_order()) {
        const LLESpec spec = *find_catalog(key);
        rows.push_back(table_row(spec, classify(spec)));
    }
    return rows;
}

struct GoldenRow
{
    std::string key;
    std::string text;
};

/// Reference rows of the classification table.
inline std::vector<GoldenRow> golden_table()
{
    return {
        {"eq6", "(2×2), M, (1+1), 2 real components"},
        {"eq7", "(4×4), M, (1+2), 4 real components"},
        {"eq8", "(4×4), MW, (1+1), 4/2 = 2 real components"},
        {"eq9", "(8×8), M, (1+3), 8 real components"},
        {"eq11", "(8×8), MW, (1+2), 8/2 = 4 real components"},
        {"eq10", "(8×8), D, (1+1), 4C ≡ 8 real components"},
        {"eq12", "(16×16), M, (1+4), 16 real components"},
        {"eq14", "(16×16), MW, (1+3), 16/2 = 8 real components"},
        {"eq13", "(16×16), D, (1+2), 8C ≡ 16 real components"},
        {"eq15", "(16×16), W, (1+1), 4C ≡ 8 real components"},
        {"eq16", "(16×16), H, (1+1), 4H ≡ 16 real components"},
    };
}

} // namespace lleq

#endif // LLEQ_LLE_HPP
