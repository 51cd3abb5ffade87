#ifndef LLEQ_SCALAR_HPP
#define LLEQ_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace lleq {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& r) { return r.str(); }

/// Exact complex number a + b*i with rational parts.
struct GaussRational
{
    Rational re{0};
    Rational im{0};

    GaussRational() = default;
    GaussRational(int v) : re(v) {}
    GaussRational(Rational r) : re(std::move(r)) {}
    GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    GaussRational conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }

    GaussRational operator-() const { return {-re, -im}; }
    GaussRational& operator+=(const GaussRational& o) { re += o.re; im += o.im; return *this; }
    GaussRational& operator-=(const GaussRational& o) { re -= o.re; im -= o.im; return *this; }
    GaussRational& operator*=(const GaussRational& o)
    {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    GaussRational& operator/=(const GaussRational& o)
    {
        if (o.is_zero()) throw std::domain_error("division by zero");
        const Rational n = o.norm();
        *this *= o.conj();
        re /= n;
        im /= n;
        return *this;
    }

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
    friend bool operator==(const GaussRational& a, const GaussRational& b) { return a.re == b.re && a.im == b.im; }
};

inline bool is_zero(const Rational& r) { return r == 0; }
inline bool is_zero(const GaussRational& z) { return z.is_zero(); }

inline std::string to_string(const GaussRational& z)
{
    if (z.im == 0) return to_string(z.re);
    std::string imag;
    if (z.im == 1) imag = "i";
    else if (z.im == -1) imag = "-i";
    else imag = to_string(z.im) + "*i";
    if (z.re == 0) return imag;
    std::string out = "(" + to_string(z.re);
    if (z.im < 0) out += " - " + (z.im == -1 ? std::string("i") : to_string(Rational(-z.im)) + "*i");
    else out += " + " + imag;
    return out + ")";
}

/// Powers of the formal symbols g (coupling) and lambda (scaling parameter).
struct SymbolPowers
{
    int g = 0;
    int lambda = 0;
    auto operator<=>(const SymbolPowers&) const = default;
};

/// Exact polynomial in g and lambda with Gaussian-rational coefficients.
///
/// Terms are kept in descending (g, lambda) order with zero coefficients
/// removed, so structural equality is mathematical equality.
class Scalar
{
public:
    using TermMap = std::map<SymbolPowers, GaussRational, std::greater<>>;

    Scalar() = default;
    Scalar(int v) : Scalar(GaussRational(v)) {}
    Scalar(const Rational& v) : Scalar(GaussRational(v)) {}
    Scalar(const GaussRational& v)
    {
        if (!v.is_zero()) terms_.emplace(SymbolPowers{}, v);
    }

    static Scalar i() { return Scalar(GaussRational::i()); }
    static Scalar g() { return monomial({1, 0}, 1); }
    static Scalar lambda() { return monomial({0, 1}, 1); }
    static Scalar monomial(SymbolPowers p, const GaussRational& c)
    {
        Scalar s;
        if (!c.is_zero()) s.terms_.emplace(p, c);
        return s;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_number() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == SymbolPowers{}); }
    bool has_lambda() const
    {
        for (const auto& [p, c] : terms_) if (p.lambda != 0) return true;
        return false;
    }
    bool has_g() const
    {
        for (const auto& [p, c] : terms_) if (p.g != 0) return true;
        return false;
    }

    /// Numeric value; throws if g or lambda are present.
    GaussRational number() const
    {
        if (!is_number()) throw std::domain_error("scalar depends on g or lambda: " + str());
        return terms_.empty() ? GaussRational{} : terms_.begin()->second;
    }

    Scalar operator-() const
    {
        Scalar r = *this;
        for (auto& [p, c] : r.terms_) c = -c;
        return r;
    }
    Scalar& operator+=(const Scalar& o)
    {
        for (const auto& [p, c] : o.terms_) add_term(p, c);
        return *this;
    }
    Scalar& operator-=(const Scalar& o)
    {
        for (const auto& [p, c] : o.terms_) add_term(p, -c);
        return *this;
    }
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b)
    {
        Scalar r;
        for (const auto& [pa, ca] : a.terms_)
            for (const auto& [pb, cb] : b.terms_)
                r.add_term({pa.g + pb.g, pa.lambda + pb.lambda}, ca * cb);
        return r;
    }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }

    /// Renders e.g. "g^2 - g", "3/2*i*lambda", "(1 + i)".
    std::string str() const;

    /// True when the rendering is a single signed product (no top-level sum).
    bool is_single_term() const { return terms_.size() <= 1; }

private:
    void add_term(const SymbolPowers& p, const GaussRational& c)
    {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(p, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TermMap terms_;
};

namespace detail {

inline std::string symbol_factors(const SymbolPowers& p)
{
    std::string s;
    auto append = [&s](const char* name, int power) {
        if (power == 0) return;
        if (!s.empty()) s += "*";
        s += name;
        if (power != 1) s += "^" + std::to_string(power);
    };
    append("g", p.g);
    append("lambda", p.lambda);
    return s;
}

/// Splits a coefficient into an overall sign and the unsigned text of its
/// magnitude, e.g. -3/2 -> (-1, "3/2"), -i -> (-1, "i"), 1+i -> (+1, "(1 + i)").
inline std::pair<int, std::string> signed_number(const GaussRational& c)
{
    if (c.im == 0) {
        if (c.re < 0) return {-1, to_string(Rational(-c.re))};
        return {1, to_string(c.re)};
    }
    if (c.re == 0) {
        const Rational m = c.im < 0 ? Rational(-c.im) : c.im;
        return {c.im < 0 ? -1 : 1, m == 1 ? std::string("i") : to_string(m) + "*i"};
    }
    return {1, to_string(c)};
}

/// Joins a signed number with trailing factors, dropping a unit coefficient.
inline std::string product_text(const std::string& number, const std::string& factors)
{
    if (factors.empty()) return number;
    if (number == "1") return factors;
    return number + "*" + factors;
}

} // namespace detail

inline std::string Scalar::str() const
{
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        auto [sign, number] = detail::signed_number(c);
        const std::string body = detail::product_text(number, detail::symbol_factors(p));
        if (first) out += (sign < 0 ? "-" : "") + body;
        else out += (sign < 0 ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

} // namespace lleq

#endif // LLEQ_SCALAR_HPP
