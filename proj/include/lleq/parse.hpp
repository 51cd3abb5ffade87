#ifndef LLEQ_PARSE_HPP
#define LLEQ_PARSE_HPP

#include "lleq/operator.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lleq {

class ParseError : public std::invalid_argument
{
public:
    ParseError(const std::string& what, std::size_t pos)
        : std::invalid_argument(what + " at offset " + std::to_string(pos)), pos_(pos)
    {
    }
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/// Recursive-descent reader for the operator grammar:
///
///   expr    := ['+'|'-'] product (('+'|'-') product)*
///   product := power (('*'|'/') power)*        '/' only by a nonzero number
///   power   := atom ['^' ['-'] integer]         negative powers only of x
///   atom    := integer | name | '(' expr ')'
///   name    := i | g | lambda | t | x | f | f' | f'' ... | dt | dx | dy | dz | dw | dx<k>
///
/// '*' is the noncommutative operator product, so "dx*x" reads as x*dx + 1.
class OperatorParser
{
public:
    explicit OperatorParser(std::string_view text) : text_(text) {}

    OperatorPoly parse()
    {
        OperatorPoly p = expr();
        skip_space();
        if (pos_ != text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
        return p;
    }

private:
    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    OperatorPoly expr()
    {
        OperatorPoly acc;
        bool negate = false;
        if (accept('-')) negate = true;
        else accept('+');
        OperatorPoly first = product();
        acc = negate ? -first : first;
        while (true) {
            if (accept('+')) acc += product();
            else if (accept('-')) acc -= product();
            else return acc;
        }
    }

    OperatorPoly product()
    {
        OperatorPoly acc = power();
        while (true) {
            if (accept('*')) {
                acc = acc * power();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                const OperatorPoly d = power();
                if (!d.is_scalar() || !d.scalar_part().is_number() || d.is_zero())
                    throw ParseError("division only by a nonzero number", at);
                acc = acc * OperatorPoly(GaussRational(1) / d.scalar_part().number());
            } else {
                return acc;
            }
        }
    }

    OperatorPoly power()
    {
        const std::size_t at = pos_;
        OperatorPoly base = atom();
        if (!accept('^')) return base;
        const bool negative = accept('-');
        const int e = integer();
        if (!negative) return pow(base, e);
        const auto& terms = base.terms();
        if (terms.size() != 1 || !(terms.begin()->second == Scalar(1)) || !terms.begin()->first.d.is_one())
            throw ParseError("negative powers are only defined for x", at);
        const FunctionMonomial& m = terms.begin()->first.fn;
        if (m.t != 0 || m.has_f()) throw ParseError("negative powers are only defined for x", at);
        return OperatorPoly::x(-m.x * e);
    }

    int integer()
    {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer", pos_);
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    OperatorPoly atom()
    {
        skip_space();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            OperatorPoly inner = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return OperatorPoly(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            const std::string name(text_.substr(start, pos_ - start));
            return named(name, start);
        }
        throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
    }

    OperatorPoly named(const std::string& name, std::size_t at)
    {
        if (name == "i") return OperatorPoly::i();
        if (name == "g") return OperatorPoly::g();
        if (name == "lambda") return OperatorPoly::lambda();
        if (name == "t") return OperatorPoly::t();
        if (name == "x") return OperatorPoly::x();
        if (name == "dt") return OperatorPoly::dt();
        if (name == "dx") return OperatorPoly::dx(1);
        if (name == "dy") return OperatorPoly::dx(2);
        if (name == "dz") return OperatorPoly::dx(3);
        if (name == "dw") return OperatorPoly::dx(4);
        if (name == "f") {
            std::size_t primes = 0;
            while (pos_ < text_.size() && text_[pos_] == '\'') {
                ++pos_;
                ++primes;
            }
            return OperatorPoly::f(primes);
        }
        if (name.size() > 2 && name.compare(0, 2, "dx") == 0 &&
            name.find_first_not_of("0123456789", 2) == std::string::npos) {
            const int k = std::stoi(name.substr(2));
            if (k < 1) throw ParseError("derivative direction must be >= 1", at);
            return OperatorPoly::dx(static_cast<std::size_t>(k));
        }
        throw ParseError("unknown symbol '" + name + "'", at);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

inline OperatorPoly parse_operator(std::string_view text) { return OperatorParser(text).parse(); }

} // namespace lleq

#endif // LLEQ_PARSE_HPP
