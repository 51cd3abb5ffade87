#ifndef LLEQ_OP_MATRIX_HPP
#define LLEQ_OP_MATRIX_HPP

#include "lleq/operator.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

namespace lleq {

/// Square matrix of operators; the size is a power of two.
class OpMatrix
{
public:
    OpMatrix() : OpMatrix(1) {}
    explicit OpMatrix(std::size_t n) : n_(n), entries_(n * n)
    {
        if (!std::has_single_bit(n)) throw std::invalid_argument("OpMatrix size must be a power of two, got " + std::to_string(n));
    }

    static OpMatrix identity(std::size_t n)
    {
        OpMatrix m(n);
        for (std::size_t k = 0; k < n; ++k) m(k, k) = OperatorPoly(1);
        return m;
    }
    /// Scalar operator times the identity.
    static OpMatrix diagonal(std::size_t n, const OperatorPoly& p)
    {
        OpMatrix m(n);
        for (std::size_t k = 0; k < n; ++k) m(k, k) = p;
        return m;
    }

    std::size_t size() const { return n_; }
    OperatorPoly& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
    const OperatorPoly& operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }

    bool is_zero() const
    {
        for (const auto& e : entries_) if (!e.is_zero()) return false;
        return true;
    }

    OpMatrix& operator+=(const OpMatrix& o)
    {
        check_same(o);
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
        return *this;
    }
    OpMatrix& operator-=(const OpMatrix& o)
    {
        check_same(o);
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
        return *this;
    }
    OpMatrix operator-() const
    {
        OpMatrix r = *this;
        for (auto& e : r.entries_) e = -e;
        return r;
    }
    friend OpMatrix operator+(OpMatrix a, const OpMatrix& b) { return a += b; }
    friend OpMatrix operator-(OpMatrix a, const OpMatrix& b) { return a -= b; }

    friend OpMatrix operator*(const OpMatrix& a, const OpMatrix& b)
    {
        a.check_same(b);
        const std::size_t n = a.n_;
        OpMatrix r(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                const OperatorPoly& lhs = a(i, k);
                if (lhs.is_zero()) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    const OperatorPoly& rhs = b(k, j);
                    if (!rhs.is_zero()) r(i, j) += lhs * rhs;
                }
            }
        }
        return r;
    }
    OpMatrix& operator*=(const OpMatrix& o) { return *this = *this * o; }

    /// Every entry multiplied on the right by p (matrix * (p * identity)).
    OpMatrix times(const OperatorPoly& p) const
    {
        OpMatrix r = *this;
        for (auto& e : r.entries_) e = e * p;
        return r;
    }
    /// Every entry multiplied on the left by p ((p * identity) * matrix).
    OpMatrix left_times(const OperatorPoly& p) const
    {
        OpMatrix r = *this;
        for (auto& e : r.entries_) e = p * e;
        return r;
    }

    friend bool operator==(const OpMatrix& a, const OpMatrix& b) { return a.n_ == b.n_ && a.entries_ == b.entries_; }

    const std::vector<OperatorPoly>& entries() const { return entries_; }

private:
    void check_same(const OpMatrix& o) const
    {
        if (n_ != o.n_)
            throw std::invalid_argument("OpMatrix dimension mismatch: " + std::to_string(n_) + " vs " + std::to_string(o.n_));
    }

    std::size_t n_;
    std::vector<OperatorPoly> entries_;
};

inline OpMatrix commutator(const OpMatrix& a, const OpMatrix& b) { return a * b - b * a; }
inline OpMatrix anticommutator(const OpMatrix& a, const OpMatrix& b) { return a * b + b * a; }

/// Kronecker product; entry ((i,k),(j,l)) = a(i,j) * b(k,l).
inline OpMatrix tensor(const OpMatrix& a, const OpMatrix& b)
{
    const std::size_t na = a.size(), nb = b.size();
    OpMatrix r(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l)
                    if (!b(k, l).is_zero()) r(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
        }
    return r;
}

/// One line per nonzero entry: "(r,c): <operator>", 1-based indices.
inline std::string to_string(const OpMatrix& m)
{
    std::string out;
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m.size(); ++c)
            if (!m(r, c).is_zero())
                out += "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + "): " + to_string(m(r, c)) + "\n";
    return out.empty() ? "0\n" : out;
}

/// Plane-wave symbol: dt -> -i*E, d_{x_k} -> i*k_k, so i*dt -> E.
/// Throws std::invalid_argument for operators with t, x or f factors.
inline Scalar symbol_eval(const OperatorPoly& p, const Rational& energy, const std::vector<Rational>& momentum)
{
    if (!p.is_constant_coefficient())
        throw std::invalid_argument("symbol_eval: operator has non-constant coefficients: " + to_string(p));
    Scalar total;
    for (const auto& [m, c] : p.terms()) {
        GaussRational v(1);
        const GaussRational dt_value(Rational(0), -energy);
        for (int k = 0; k < m.d.dt; ++k) v *= dt_value;
        for (std::size_t k = 0; k < m.d.dx.size(); ++k) {
            if (m.d.dx[k] == 0) continue;
            if (k >= momentum.size())
                throw std::invalid_argument("symbol_eval: missing momentum component " + std::to_string(k + 1));
            const GaussRational dx_value(Rational(0), momentum[k]);
            for (int e = 0; e < m.d.dx[k]; ++e) v *= dx_value;
        }
        total += c * Scalar(v);
    }
    return total;
}

} // namespace lleq

#endif // LLEQ_OP_MATRIX_HPP
