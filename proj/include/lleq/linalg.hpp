#ifndef LLEQ_LINALG_HPP
#define LLEQ_LINALG_HPP

#include "lleq/scalar.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lleq {

/// Dense row-major matrix over an exact field.
template <typename T>
class Matrix
{
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t k = 0; k < n; ++k) m(k, k) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const
    {
        for (const auto& v : data_) if (!lleq::is_zero(v)) return false;
        return true;
    }

    T trace() const
    {
        T s(0);
        for (std::size_t k = 0; k < std::min(rows_, cols_); ++k) s += (*this)(k, k);
        return s;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product dimension mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& lhs = a(i, k);
                if (lleq::is_zero(lhs)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += lhs * b(k, j);
            }
        return r;
    }
    friend Matrix operator+(Matrix a, const Matrix& b)
    {
        a.check_same(b);
        for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b)
    {
        a.check_same(b);
        for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
        return a;
    }
    friend Matrix operator*(const T& s, Matrix a)
    {
        for (auto& v : a.data_) v *= s;
        return a;
    }
    Matrix operator-() const { return T(-1) * *this; }
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    const std::vector<T>& data() const { return data_; }

private:
    void check_same(const Matrix& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix dimension mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Exact determinant by Gaussian elimination over a field.
template <typename T>
T determinant(Matrix<T> m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = m.rows();
    T det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && is_zero(m(pivot, c))) ++pivot;
        if (pivot == n) return T(0);
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(c, j));
            det = T(0) - det;
        }
        det *= m(c, c);
        const T inv = T(1) / m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (is_zero(m(r, c))) continue;
            const T factor = m(r, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(r, j) -= factor * m(c, j);
        }
    }
    return det;
}

/// Sparse row: column index -> nonzero value.
template <typename T>
using SparseRow = std::map<std::size_t, T>;

/// Exact reduced row echelon form of a sparse system, built incrementally.
///
/// Rows are reduced against existing pivots as they are inserted, so a
/// system with many redundant equations stays small.
template <typename T>
class Echelon
{
public:
    explicit Echelon(std::size_t columns) : columns_(columns) {}

    /// Inserts a row; returns false if it was linearly dependent.
    bool insert(SparseRow<T> row)
    {
        reduce(row);
        if (row.empty()) return false;
        const std::size_t pivot = row.begin()->first;
        const T inv = T(1) / row.begin()->second;
        for (auto& [c, v] : row) v *= inv;
        // keep fully reduced: eliminate the new pivot from earlier rows
        for (auto& [p, other] : pivots_) {
            auto it = other.find(pivot);
            if (it == other.end()) continue;
            const T factor = it->second;
            axpy(other, row, factor);
        }
        pivots_.emplace(pivot, std::move(row));
        return true;
    }

    std::size_t rank() const { return pivots_.size(); }
    std::size_t columns() const { return columns_; }
    const std::map<std::size_t, SparseRow<T>>& pivot_rows() const { return pivots_; }

    /// Basis of {v : A v = 0}, one vector per free column, in column order.
    std::vector<std::vector<T>> nullspace() const
    {
        std::vector<std::vector<T>> basis;
        for (std::size_t free = 0; free < columns_; ++free) {
            if (pivots_.count(free)) continue;
            std::vector<T> v(columns_, T(0));
            v[free] = T(1);
            for (const auto& [p, row] : pivots_) {
                auto it = row.find(free);
                if (it != row.end()) v[p] = -it->second;
            }
            basis.push_back(std::move(v));
        }
        return basis;
    }

    void reduce(SparseRow<T>& row) const
    {
        for (auto it = row.begin(); it != row.end();) {
            auto p = pivots_.find(it->first);
            if (p == pivots_.end()) {
                ++it;
                continue;
            }
            const std::size_t col = it->first;
            const T factor = it->second;
            axpy(row, p->second, factor);
            it = row.upper_bound(col);
        }
    }

private:
    /// target -= factor * source
    static void axpy(SparseRow<T>& target, const SparseRow<T>& source, const T& factor)
    {
        for (const auto& [c, v] : source) {
            auto [it, inserted] = target.try_emplace(c, T(0));
            it->second -= factor * v;
            if (is_zero(it->second)) target.erase(it);
        }
    }

    std::size_t columns_;
    std::map<std::size_t, SparseRow<T>> pivots_;
};

/// Solves sum_j x_j * columns[j] = target exactly; nullopt when inconsistent.
/// Each column and the target are sparse vectors over a shared index space.
/// Free unknowns are set to zero.
template <typename T, typename Index>
std::optional<std::vector<T>> solve_in_span(const std::vector<std::map<Index, T>>& columns,
                                            const std::map<Index, T>& target)
{
    // Transpose into equations: one row per coordinate index.
    std::map<Index, SparseRow<T>> equations;
    const std::size_t n = columns.size();
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& [idx, v] : columns[j]) equations[idx][j] = v;
    for (const auto& [idx, v] : target) equations[idx][n] = v;

    Echelon<T> ech(n + 1);
    for (auto& [idx, row] : equations) ech.insert(std::move(row));
    if (ech.pivot_rows().count(n)) return std::nullopt;

    std::vector<T> x(n, T(0));
    for (const auto& [p, row] : ech.pivot_rows()) {
        auto it = row.find(n);
        if (it != row.end()) x[p] = it->second;
    }
    return x;
}

} // namespace lleq

#endif // LLEQ_LINALG_HPP
