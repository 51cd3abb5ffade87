#ifndef LLEQ_OPERATOR_HPP
#define LLEQ_OPERATOR_HPP

#include "lleq/scalar.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <vector>

namespace lleq {

/// Commuting product t^t * x^x * prod_j (f^(j))^f[j].
///
/// x admits negative powers; f[j] is the power of the j-th derivative of the
/// formal prepotential f(x). Trailing zero entries of f are trimmed.
struct FunctionMonomial
{
    int t = 0;
    int x = 0;
    std::vector<int> f;

    auto operator<=>(const FunctionMonomial&) const = default;
    bool operator==(const FunctionMonomial&) const = default;

    bool is_one() const { return t == 0 && x == 0 && f.empty(); }
    bool has_f() const { return !f.empty(); }

    void trim()
    {
        while (!f.empty() && f.back() == 0) f.pop_back();
    }

    friend FunctionMonomial operator*(const FunctionMonomial& a, const FunctionMonomial& b)
    {
        FunctionMonomial r{a.t + b.t, a.x + b.x, a.f};
        if (r.f.size() < b.f.size()) r.f.resize(b.f.size(), 0);
        for (std::size_t j = 0; j < b.f.size(); ++j) r.f[j] += b.f[j];
        r.trim();
        return r;
    }
};

/// Commuting product dt^dt * prod_k d_{x_k}^dx[k-1].
struct DerivMonomial
{
    int dt = 0;
    std::vector<int> dx;

    auto operator<=>(const DerivMonomial&) const = default;
    bool operator==(const DerivMonomial&) const = default;

    bool is_one() const { return dt == 0 && dx.empty(); }
    int dx_power(std::size_t direction) const { return direction <= dx.size() ? dx[direction - 1] : 0; }

    void trim()
    {
        while (!dx.empty() && dx.back() == 0) dx.pop_back();
    }

    friend DerivMonomial operator*(const DerivMonomial& a, const DerivMonomial& b)
    {
        DerivMonomial r{a.dt + b.dt, a.dx};
        if (r.dx.size() < b.dx.size()) r.dx.resize(b.dx.size(), 0);
        for (std::size_t k = 0; k < b.dx.size(); ++k) r.dx[k] += b.dx[k];
        r.trim();
        return r;
    }
};

/// Normal-ordered monomial: function factors to the left of derivatives.
struct Monomial
{
    DerivMonomial d;
    FunctionMonomial fn;

    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;
};

namespace detail {

using FunctionPoly = std::map<FunctionMonomial, Rational>;

inline void accumulate(FunctionPoly& p, const FunctionMonomial& m, const Rational& c)
{
    if (c == 0) return;
    auto [it, inserted] = p.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

/// d/dx of a function monomial (t is a spectator).
inline FunctionPoly d_dx(const FunctionMonomial& m)
{
    FunctionPoly out;
    if (m.x != 0) {
        FunctionMonomial r = m;
        r.x -= 1;
        accumulate(out, r, Rational(m.x));
    }
    for (std::size_t j = 0; j < m.f.size(); ++j) {
        if (m.f[j] == 0) continue;
        FunctionMonomial r = m;
        r.f[j] -= 1;
        if (r.f.size() <= j + 1) r.f.resize(j + 2, 0);
        r.f[j + 1] += 1;
        r.trim();
        accumulate(out, r, Rational(m.f[j]));
    }
    return out;
}

inline FunctionPoly d_dx(const FunctionPoly& p)
{
    FunctionPoly out;
    for (const auto& [m, c] : p)
        for (const auto& [dm, dc] : d_dx(m)) accumulate(out, dm, c * dc);
    return out;
}

inline Rational binomial(int n, int k)
{
    Integer r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return Rational(r);
}

inline Rational falling_factorial(int a, int r)
{
    Integer v = 1;
    for (int i = 0; i < r; ++i) v *= (a - i);
    return Rational(v);
}

} // namespace detail

/// Element of the noncommutative ring of differential operators in t, x
/// (plus extra spatial directions) over g/lambda-polynomial coefficients.
///
/// Canonical form: every term is a normal-ordered Monomial; terms are kept in
/// descending monomial order with like terms merged and zeros dropped.
class OperatorPoly
{
public:
    using TermMap = std::map<Monomial, Scalar, std::greater<>>;

    OperatorPoly() = default;
    OperatorPoly(int v) : OperatorPoly(Scalar(v)) {}
    OperatorPoly(const Rational& v) : OperatorPoly(Scalar(v)) {}
    OperatorPoly(const GaussRational& v) : OperatorPoly(Scalar(v)) {}
    OperatorPoly(const Scalar& c) { add_term(Monomial{}, c); }

    static OperatorPoly monomial(const Scalar& c, FunctionMonomial fn, DerivMonomial d)
    {
        fn.trim();
        d.trim();
        OperatorPoly p;
        p.add_term(Monomial{std::move(d), std::move(fn)}, c);
        return p;
    }
    static OperatorPoly i() { return Scalar::i(); }
    static OperatorPoly g() { return Scalar::g(); }
    static OperatorPoly lambda() { return Scalar::lambda(); }
    static OperatorPoly t(int power = 1) { return monomial(1, {power, 0, {}}, {}); }
    static OperatorPoly x(int power = 1) { return monomial(1, {0, power, {}}, {}); }
    /// j-th derivative of the formal prepotential f(x).
    static OperatorPoly f(std::size_t j = 0)
    {
        FunctionMonomial m;
        m.f.assign(j + 1, 0);
        m.f[j] = 1;
        return monomial(1, m, {});
    }
    static OperatorPoly dt(int power = 1) { return monomial(1, {}, {power, {}}); }
    /// Derivative along spatial direction k (1-based: x, y, z, w, ...).
    static OperatorPoly dx(std::size_t direction = 1, int power = 1)
    {
        DerivMonomial d;
        d.dx.assign(direction, 0);
        d.dx[direction - 1] = power;
        return monomial(1, {}, d);
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool has_derivatives() const
    {
        return std::any_of(terms_.begin(), terms_.end(), [](const auto& kv) { return !kv.first.d.is_one(); });
    }
    bool has_t() const
    {
        return std::any_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.fn.t != 0; });
    }
    bool has_f() const
    {
        return std::any_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.fn.has_f(); });
    }
    /// No t, x or f factors: a constant-coefficient differential operator.
    bool is_constant_coefficient() const
    {
        return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.fn.is_one(); });
    }
    bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{}); }
    Scalar scalar_part() const
    {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? Scalar{} : it->second;
    }

    OperatorPoly operator-() const
    {
        OperatorPoly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    OperatorPoly& operator+=(const OperatorPoly& o)
    {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    OperatorPoly& operator-=(const OperatorPoly& o)
    {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend OperatorPoly operator+(OperatorPoly a, const OperatorPoly& b) { return a += b; }
    friend OperatorPoly operator-(OperatorPoly a, const OperatorPoly& b) { return a -= b; }
    friend OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b);
    OperatorPoly& operator*=(const OperatorPoly& o) { return *this = *this * o; }
    friend bool operator==(const OperatorPoly& a, const OperatorPoly& b) { return a.terms_ == b.terms_; }

    /// d/dx of a derivative-free operator, i.e. the commutator [dx, *this].
    OperatorPoly derivative_x() const;

    void add_term(const Monomial& m, const Scalar& c)
    {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

private:
    TermMap terms_;
};

namespace detail {

/// Moves the derivative monomial d past the function monomial fn:
/// d * fn = sum_i c_i * fn_i * d_i, by Leibniz in t and in x.
/// Derivatives along directions k >= 2 commute with every function factor.
inline std::vector<std::pair<Rational, Monomial>> commute_past(const DerivMonomial& d, const FunctionMonomial& fn)
{
    std::vector<std::pair<Rational, Monomial>> out;
    const int p = d.dt;
    const int q = d.dx_power(1);

    FunctionMonomial spatial = fn;
    spatial.t = 0;
    FunctionPoly layer{{spatial, Rational(1)}};
    for (int s = 0; s <= q; ++s) {
        if (layer.empty()) break;
        const Rational cx = binomial(q, s);
        for (int r = 0; r <= std::min(p, fn.t); ++r) {
            const Rational ct = binomial(p, r) * falling_factorial(fn.t, r);
            DerivMonomial rest = d;
            rest.dt = p - r;
            if (q > 0) rest.dx[0] = q - s;
            rest.trim();
            for (const auto& [m, c] : layer) {
                FunctionMonomial moved = m;
                moved.t = fn.t - r;
                out.push_back({cx * ct * c, Monomial{rest, moved}});
            }
        }
        if (s < q) layer = d_dx(layer);
    }
    return out;
}

} // namespace detail

inline OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b)
{
    OperatorPoly r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            const Scalar c = ca * cb;
            if (ma.d.is_one()) {
                r.add_term(Monomial{mb.d, ma.fn * mb.fn}, c);
                continue;
            }
            for (const auto& [k, m] : detail::commute_past(ma.d, mb.fn))
                r.add_term(Monomial{m.d * mb.d, ma.fn * m.fn}, c * Scalar(k));
        }
    }
    return r;
}

inline OperatorPoly OperatorPoly::derivative_x() const
{
    if (has_derivatives()) throw std::invalid_argument("derivative_x: operator contains derivatives");
    return dx() * (*this) - (*this) * dx();
}

inline OperatorPoly commutator(const OperatorPoly& a, const OperatorPoly& b) { return a * b - b * a; }
inline OperatorPoly anticommutator(const OperatorPoly& a, const OperatorPoly& b) { return a * b + b * a; }

inline OperatorPoly pow(const OperatorPoly& a, int n)
{
    OperatorPoly r(1);
    for (int k = 0; k < n; ++k) r *= a;
    return r;
}

/// Name of the derivative along spatial direction k: dx, dy, dz, dw, dx5, ...
inline std::string derivative_name(std::size_t direction)
{
    switch (direction) {
    case 1: return "dx";
    case 2: return "dy";
    case 3: return "dz";
    case 4: return "dw";
    default: return "dx" + std::to_string(direction);
    }
}

namespace detail {

inline void push_power(std::vector<std::string>& out, const std::string& name, int power)
{
    if (power == 0) return;
    out.push_back(power == 1 ? name : name + "^" + std::to_string(power));
}

inline std::vector<std::string> monomial_factors(const Monomial& m)
{
    std::vector<std::string> out;
    push_power(out, "t", m.fn.t);
    push_power(out, "x", m.fn.x);
    for (std::size_t j = 0; j < m.fn.f.size(); ++j) push_power(out, "f" + std::string(j, '\''), m.fn.f[j]);
    push_power(out, "dt", m.d.dt);
    for (std::size_t k = 0; k < m.d.dx.size(); ++k) push_power(out, derivative_name(k + 1), m.d.dx[k]);
    return out;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep)
{
    std::string s;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k) s += sep;
        s += parts[k];
    }
    return s;
}

} // namespace detail

/// Renders an operator in the text grammar documented in the README, e.g.
/// "i*dt + dx^2 - g^2*x^-2". A non-empty `applied_to` is appended as a final
/// factor of every term ("dx*psi2 + f*psi2").
inline std::string to_string(const OperatorPoly& p, const std::string& applied_to = {})
{
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        std::vector<std::string> factors;
        int sign = 1;
        std::string number;
        if (c.is_single_term()) {
            const auto& [powers, value] = *c.terms().begin();
            std::tie(sign, number) = detail::signed_number(value);
            const std::string sym = detail::symbol_factors(powers);
            if (!sym.empty()) factors.push_back(sym);
        } else {
            number = "(" + c.str() + ")";
        }
        for (auto& f : detail::monomial_factors(m)) factors.push_back(std::move(f));
        if (!applied_to.empty()) factors.push_back(applied_to);
        const std::string body = detail::product_text(number, detail::join(factors, "*"));
        if (first) out += (sign < 0 ? "-" : "") + body;
        else out += (sign < 0 ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const OperatorPoly& p) { return os << to_string(p); }

} // namespace lleq

#endif // LLEQ_OPERATOR_HPP
