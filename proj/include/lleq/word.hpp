#ifndef LLEQ_WORD_HPP
#define LLEQ_WORD_HPP

#include "lleq/linalg.hpp"
#include "lleq/op_matrix.hpp"

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lleq {

/// The five letters. X, Y, A, I are constant 2x2 real matrices; Q is the
/// differential matrix [[0, 1], [i*dt, 0]] with Q^2 = i*dt.
enum class Letter { X, Y, A, I, Q };

inline char to_char(Letter l)
{
    switch (l) {
    case Letter::X: return 'X';
    case Letter::Y: return 'Y';
    case Letter::A: return 'A';
    case Letter::I: return 'I';
    case Letter::Q: return 'Q';
    }
    return '?';
}

inline Letter letter_from_char(char c)
{
    switch (c) {
    case 'X': return Letter::X;
    case 'Y': return Letter::Y;
    case 'A': return Letter::A;
    case 'I': return Letter::I;
    case 'Q': return Letter::Q;
    default: throw std::invalid_argument(std::string("unknown letter '") + c + "', expected one of XYAIQ");
    }
}

constexpr Letter kConstantLetters[] = {Letter::I, Letter::X, Letter::Y, Letter::A};

/// Square of a constant letter: +1 for X, Y, I and -1 for A.
inline int square_sign(Letter l)
{
    if (l == Letter::Q) throw std::invalid_argument("square_sign: Q squares to i*dt, not to a sign");
    return l == Letter::A ? -1 : 1;
}

/// A tensor-product word. Well-formed words are nonempty and carry at most
/// one Q, which must sit in slot 1.
class Word
{
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) { validate(); }
    Word(std::string_view text) : Word(parse_letters(text)) {}
    Word(const char* text) : Word(std::string_view(text)) {}

    std::size_t size() const { return letters_.size(); }
    Letter operator[](std::size_t slot) const { return letters_[slot]; }
    const std::vector<Letter>& letters() const { return letters_; }
    bool has_q() const { return !letters_.empty() && letters_.front() == Letter::Q; }
    bool is_constant() const { return !has_q(); }

    std::string str() const
    {
        std::string s;
        for (Letter l : letters_) s += to_char(l);
        return s;
    }

    /// Copy with the letter in `slot` replaced (re-validated).
    Word with(std::size_t slot, Letter l) const
    {
        auto letters = letters_;
        letters.at(slot) = l;
        return Word(std::move(letters));
    }

    /// Word of `length` identity letters.
    static Word identity(std::size_t length) { return Word(std::vector<Letter>(length, Letter::I)); }

    auto operator<=>(const Word&) const = default;
    bool operator==(const Word&) const = default;

private:
    static std::vector<Letter> parse_letters(std::string_view text)
    {
        std::vector<Letter> letters;
        letters.reserve(text.size());
        for (char c : text) letters.push_back(letter_from_char(c));
        return letters;
    }

    void validate() const
    {
        if (letters_.empty()) throw std::invalid_argument("malformed word: empty");
        for (std::size_t k = 1; k < letters_.size(); ++k)
            if (letters_[k] == Letter::Q)
                throw std::invalid_argument("malformed word '" + str() + "': Q allowed only in slot 1");
    }

    std::vector<Letter> letters_;
};

inline std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

inline OpMatrix letter_matrix(Letter l)
{
    OpMatrix m(2);
    switch (l) {
    case Letter::X: m(0, 0) = 1; m(1, 1) = -1; break;
    case Letter::Y: m(0, 1) = 1; m(1, 0) = 1; break;
    case Letter::A: m(0, 1) = 1; m(1, 0) = -1; break;
    case Letter::I: m(0, 0) = 1; m(1, 1) = 1; break;
    case Letter::Q: m(0, 1) = 1; m(1, 0) = OperatorPoly::i() * OperatorPoly::dt(); break;
    }
    return m;
}

/// Tensor product of the letter matrices, slot 1 outermost.
inline OpMatrix word_matrix(const Word& w)
{
    OpMatrix m = letter_matrix(w[0]);
    for (std::size_t k = 1; k < w.size(); ++k) m = tensor(m, letter_matrix(w[k]));
    return m;
}

/// Signed permutation: row r has its single nonzero entry sign[r] in column col[r].
struct SignedPermutation
{
    std::vector<std::size_t> col;
    std::vector<int> sign;

    std::size_t size() const { return col.size(); }

    friend SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b)
    {
        SignedPermutation r{std::vector<std::size_t>(a.size()), std::vector<int>(a.size())};
        for (std::size_t i = 0; i < a.size(); ++i) {
            r.col[i] = b.col[a.col[i]];
            r.sign[i] = a.sign[i] * b.sign[a.col[i]];
        }
        return r;
    }
    bool operator==(const SignedPermutation&) const = default;

    Matrix<Rational> dense() const
    {
        Matrix<Rational> m(size(), size());
        for (std::size_t i = 0; i < size(); ++i) m(i, col[i]) = sign[i];
        return m;
    }
};

/// Fast representation of a constant word.
inline SignedPermutation signed_permutation(const Word& w)
{
    if (!w.is_constant()) throw std::invalid_argument("signed_permutation: word '" + w.str() + "' contains Q");
    SignedPermutation p{{0}, {1}};
    for (Letter l : w.letters()) {
        const std::size_t n = p.size();
        SignedPermutation next{std::vector<std::size_t>(2 * n), std::vector<int>(2 * n)};
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t bit = 0; bit < 2; ++bit) {
                std::size_t target = bit;
                int s = 1;
                switch (l) {
                case Letter::X: s = bit ? -1 : 1; break;
                case Letter::Y: target = 1 - bit; break;
                case Letter::A: target = 1 - bit; s = bit ? -1 : 1; break;
                default: break;
                }
                next.col[2 * i + bit] = 2 * p.col[i] + target;
                next.sign[2 * i + bit] = p.sign[i] * s;
            }
        p = std::move(next);
    }
    return p;
}

/// Dense exact matrix of a constant word.
inline Matrix<Rational> constant_matrix(const Word& w) { return signed_permutation(w).dense(); }

/// Product of two constant letters as sign * letter.
inline std::pair<int, Letter> letter_product(Letter a, Letter b)
{
    using L = Letter;
    if (a == L::Q || b == L::Q) throw std::invalid_argument("letter_product: constant letters only");
    if (a == L::I) return {1, b};
    if (b == L::I) return {1, a};
    if (a == b) return {square_sign(a), L::I};
    if (a == L::X && b == L::Y) return {1, L::A};
    if (a == L::Y && b == L::X) return {-1, L::A};
    if (a == L::X && b == L::A) return {1, L::Y};
    if (a == L::A && b == L::X) return {-1, L::Y};
    if (a == L::Y && b == L::A) return {-1, L::X};
    return {1, L::X}; // A * Y
}

/// Slotwise product of equal-length constant words as sign * word.
inline std::pair<int, Word> word_product(const Word& u, const Word& v)
{
    if (u.size() != v.size()) throw std::invalid_argument("word_product: length mismatch");
    int sign = 1;
    std::vector<Letter> letters;
    for (std::size_t k = 0; k < u.size(); ++k) {
        auto [s, l] = letter_product(u[k], v[k]);
        sign *= s;
        letters.push_back(l);
    }
    return {sign, Word(std::move(letters))};
}

/// +1 if w^2 = identity, -1 if w^2 = -identity.
inline int square_sign(const Word& w)
{
    if (!w.is_constant()) throw std::invalid_argument("square_sign: word '" + w.str() + "' contains Q");
    int s = 1;
    for (Letter l : w.letters()) s *= square_sign(l);
    return s;
}

enum class PairRelation { Commute, Anticommute, Neither };

inline const char* to_string(PairRelation r)
{
    switch (r) {
    case PairRelation::Commute: return "Commute";
    case PairRelation::Anticommute: return "Anticommute";
    case PairRelation::Neither: return "Neither";
    }
    return "?";
}

/// Relation between two letters in one slot.
inline PairRelation letter_relation(Letter a, Letter b)
{
    using L = Letter;
    if (a == b || a == L::I || b == L::I) return PairRelation::Commute;
    if (a == L::Q || b == L::Q) {
        const Letter other = a == L::Q ? b : a;
        return other == L::X ? PairRelation::Anticommute : PairRelation::Neither;
    }
    return PairRelation::Anticommute;
}

/// Slotwise (anti)commutation: Neither if any slot is Neither, otherwise the
/// parity of anticommuting slots decides.
inline PairRelation pair_relation(const Word& u, const Word& v)
{
    if (u.size() != v.size())
        throw std::invalid_argument("pair_relation: length mismatch ('" + u.str() + "' vs '" + v.str() + "')");
    bool odd = false;
    for (std::size_t k = 0; k < u.size(); ++k) {
        const PairRelation r = letter_relation(u[k], v[k]);
        if (r == PairRelation::Neither) return PairRelation::Neither;
        if (r == PairRelation::Anticommute) odd = !odd;
    }
    return odd ? PairRelation::Anticommute : PairRelation::Commute;
}

/// All 4^length constant words, in I < X < Y < A order per slot.
inline std::vector<Word> all_constant_words(std::size_t length)
{
    std::vector<Word> out;
    std::vector<Letter> letters(length, Letter::I);
    std::vector<std::size_t> idx(length, 0);
    while (true) {
        for (std::size_t k = 0; k < length; ++k) letters[k] = kConstantLetters[idx[k]];
        out.emplace_back(letters);
        std::size_t k = length;
        while (k > 0) {
            --k;
            if (++idx[k] < 4) break;
            idx[k] = 0;
            if (k == 0) return out;
        }
        if (length == 0) return out;
    }
}

/// Recognizes a constant matrix as sign * word by peeling 2x2 block patterns.
inline std::optional<std::pair<int, Word>> match_word(const Matrix<Rational>& m)
{
    const std::size_t n = m.rows();
    if (n != m.cols() || n < 2 || (n & (n - 1)) != 0) return std::nullopt;
    std::vector<Letter> letters;
    Matrix<Rational> cur = m;
    while (cur.rows() > 1) {
        const std::size_t h = cur.rows() / 2;
        auto block = [&](std::size_t br, std::size_t bc) {
            Matrix<Rational> b(h, h);
            for (std::size_t i = 0; i < h; ++i)
                for (std::size_t j = 0; j < h; ++j) b(i, j) = cur(br * h + i, bc * h + j);
            return b;
        };
        const auto b00 = block(0, 0), b01 = block(0, 1), b10 = block(1, 0), b11 = block(1, 1);
        Letter l;
        Matrix<Rational> next;
        if (b01.is_zero() && b10.is_zero() && !b00.is_zero()) {
            if (b11 == b00) l = Letter::I;
            else if (b11 == -b00) l = Letter::X;
            else return std::nullopt;
            next = b00;
        } else if (b00.is_zero() && b11.is_zero() && !b01.is_zero()) {
            if (b10 == b01) l = Letter::Y;
            else if (b10 == -b01) l = Letter::A;
            else return std::nullopt;
            next = b01;
        } else {
            return std::nullopt;
        }
        letters.push_back(l);
        cur = std::move(next);
    }
    const Rational& s = cur(0, 0);
    if (s != 1 && s != -1) return std::nullopt;
    return std::make_pair(s == 1 ? 1 : -1, Word(std::move(letters)));
}

} // namespace lleq

#endif // LLEQ_WORD_HPP
