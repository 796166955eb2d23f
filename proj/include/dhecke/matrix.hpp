/*
   Copyright 2026 The dhecke Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file matrix.hpp
 * @brief Dense matrices over an exact ring with reduced row echelon forms.
 *
 * T must provide +, -, * and the free functions zero_like, one_like and
 * is_zero. Echelon routines additionally need division (a field).
 * Matrices carry a zero prototype so that empty or 0x0 matrices still know
 * their scalar ring.
 */

#ifndef DHECKE_MATRIX_HPP
#define DHECKE_MATRIX_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "ratfunc.hpp"

namespace dhecke {

template <class T>
using Vec = std::vector<T>;

template <class T>
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& zero)
        : rows_(rows), cols_(cols), zero_(zero_like(zero)), a_(rows * cols, zero_) {}

    static Matrix identity(std::size_t n, const T& proto) {
        Matrix m(n, n, proto);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one_like(proto);
        return m;
    }
    static Matrix from_rows(const std::vector<std::vector<T>>& rows, const T& proto) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size(), proto);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw ShapeError("ragged row list");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }
    /// Matrix whose columns are the given vectors.
    static Matrix from_columns(const std::vector<Vec<T>>& cols, std::size_t rows, const T& proto) {
        Matrix m(rows, cols.size(), proto);
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw ShapeError("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    const T& zero() const { return zero_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec<T> row(std::size_t i) const { return Vec<T>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }
    Vec<T> col(std::size_t j) const {
        Vec<T> v;
        v.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
        return v;
    }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        same_shape(x, y);
        Matrix r = x;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        same_shape(x, y);
        Matrix r = x;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw ShapeError("matrix product dimension mismatch");
        Matrix r(x.rows_, y.cols_, x.zero_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t l = 0; l < x.cols_; ++l) {
                const T& xil = x(i, l);
                if (is_zero(xil)) continue;
                for (std::size_t j = 0; j < y.cols_; ++j)
                    if (!is_zero(y(l, j))) r(i, j) = r(i, j) + xil * y(l, j);
            }
        return r;
    }
    friend Vec<T> operator*(const Matrix& x, const Vec<T>& v) {
        if (x.cols_ != v.size()) throw ShapeError("matrix-vector dimension mismatch");
        Vec<T> r(x.rows_, x.zero_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t j = 0; j < x.cols_; ++j)
                if (!is_zero(x(i, j)) && !is_zero(v[j])) r[i] = r[i] + x(i, j) * v[j];
        return r;
    }
    Matrix scaled(const T& s) const {
        Matrix r = *this;
        for (auto& x : r.a_) x = x * s;
        return r;
    }
    /// this - s*I
    Matrix minus_scalar(const T& s) const {
        if (!is_square()) throw ShapeError("minus_scalar needs a square matrix");
        Matrix r = *this;
        for (std::size_t i = 0; i < rows_; ++i) r(i, i) = r(i, i) - s;
        return r;
    }
    Matrix transpose() const {
        Matrix r(cols_, rows_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }
    Matrix submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
        Matrix r(rs.size(), cs.size(), zero_);
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < cs.size(); ++j) r(i, j) = (*this)(rs[i], cs[j]);
        return r;
    }
    template <class F>
    auto map(F&& f) const -> Matrix<decltype(f(std::declval<T>()))> {
        using U = decltype(f(std::declval<T>()));
        Matrix<U> r(rows_, cols_, f(zero_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
        return r;
    }

    bool is_zero_matrix() const {
        for (const auto& x : a_)
            if (!is_zero(x)) return false;
        return true;
    }
    bool is_diagonal() const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (i != j && !is_zero((*this)(i, j))) return false;
        return true;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

   private:
    static void same_shape(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw ShapeError("matrix shapes differ");
    }

    std::size_t rows_ = 0, cols_ = 0;
    T zero_{};
    std::vector<T> a_;
};

using MatrixQ = Matrix<RatFunc>;

/// In-place reduced row echelon form. Pivot = first nonzero entry in row order. Returns pivot columns.
template <class T>
std::vector<std::size_t> rref_inplace(Matrix<T>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = m.rows();
        for (std::size_t i = r; i < m.rows(); ++i)
            if (!is_zero(m(i, c))) { piv = i; break; }
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
        const T inv = one_like(m.zero()) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j)
            if (!is_zero(m(r, j))) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            const T f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!is_zero(m(r, j))) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class T>
Matrix<T> rref(Matrix<T> m) {
    rref_inplace(m);
    return m;
}

template <class T>
std::size_t rank(Matrix<T> m) {
    return rref_inplace(m).size();
}

/// Kernel basis {v : Mv = 0}, one vector per free column, in echelon normal form
/// (entry 1 at its free column, 0 at the other free columns).
template <class T>
std::vector<Vec<T>> nullspace(Matrix<T> m) {
    const auto pivots = rref_inplace(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec<T>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec<T> v(m.cols(), m.zero());
        v[f] = one_like(m.zero());
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solve A x = b for a consistent system (any particular solution); throws InvariantViolation otherwise.
template <class T>
Vec<T> solve(const Matrix<T>& A, const Vec<T>& b) {
    Matrix<T> aug(A.rows(), A.cols() + 1, A.zero());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
        aug(i, A.cols()) = b[i];
    }
    const auto pivots = rref_inplace(aug);
    Vec<T> x(A.cols(), A.zero());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == A.cols()) throw InvariantViolation("inconsistent linear system");
        x[pivots[r]] = aug(r, A.cols());
    }
    return x;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& A) {
    if (!A.is_square()) throw ShapeError("inverse of non-square matrix");
    const std::size_t n = A.rows();
    Matrix<T> aug(n, 2 * n, A.zero());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = A(i, j);
        aug(i, n + i) = one_like(A.zero());
    }
    const auto pivots = rref_inplace(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw DivisionByZero("singular matrix");
    Matrix<T> r(n, n, A.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
    return r;
}

/// Scale so the first nonzero coordinate is 1.
template <class T>
Vec<T> normalize_first_nonzero(Vec<T> v) {
    for (const auto& x : v)
        if (!is_zero(x)) {
            const T inv = one_like(x) / x;
            for (auto& y : v) y = y * inv;
            break;
        }
    return v;
}

/// Echelon basis of the row space spanned by vectors; useful for span membership tests.
template <class T>
class SpanBuilder {
   public:
    explicit SpanBuilder(std::size_t dim) : dim_(dim) {}

    /// Reduces v against the current basis; returns the residue.
    Vec<T> reduce(Vec<T> v) const {
        for (std::size_t b = 0; b < basis_.size(); ++b) {
            const T& f = v[pivots_[b]];
            if (is_zero(f)) continue;
            const T factor = f;
            for (std::size_t j = 0; j < dim_; ++j)
                if (!is_zero(basis_[b][j])) v[j] = v[j] - factor * basis_[b][j];
        }
        return v;
    }
    bool contains(const Vec<T>& v) const {
        for (const auto& x : reduce(v))
            if (!is_zero(x)) return false;
        return true;
    }
    /// Adds v; returns false if v was already in the span.
    bool add(const Vec<T>& v) {
        Vec<T> r = reduce(v);
        std::size_t p = dim_;
        for (std::size_t j = 0; j < dim_; ++j)
            if (!is_zero(r[j])) { p = j; break; }
        if (p == dim_) return false;
        const T inv = one_like(r[p]) / r[p];
        for (auto& x : r) x = x * inv;
        // keep the basis fully reduced at the new pivot
        for (auto& b : basis_) {
            if (is_zero(b[p])) continue;
            const T f = b[p];
            for (std::size_t j = 0; j < dim_; ++j)
                if (!is_zero(r[j])) b[j] = b[j] - f * r[j];
        }
        basis_.push_back(std::move(r));
        pivots_.push_back(p);
        return true;
    }
    std::size_t size() const { return basis_.size(); }
    const std::vector<Vec<T>>& basis() const { return basis_; }

   private:
    std::size_t dim_;
    std::vector<Vec<T>> basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace dhecke

#endif
