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

#ifndef DHECKE_CHARPOLY_HPP
#define DHECKE_CHARPOLY_HPP

#include <vector>

#include "matrix.hpp"
#include "upoly.hpp"

namespace dhecke {

/// det(XI - M) by Berkowitz' algorithm. Uses only ring operations, so it is valid over
/// F_q[T] and in any characteristic.
template <class K>
UPoly<K> berkowitz(const Matrix<K>& A) {
    if (!A.is_square()) throw ShapeError("charpoly of non-square matrix");
    const std::size_t n = A.rows();
    const K zero = A.zero(), one = one_like(zero);
    if (n == 0) return UPoly<K>::constant(one);
    // descending coefficients
    std::vector<K> vect{one, -A(0, 0)};
    for (std::size_t r = 1; r < n; ++r) {
        std::vector<K> c(r + 2, zero);
        c[0] = one;
        c[1] = -A(r, r);
        // powers Asub^i S, i = 0..r-1
        std::vector<K> s(r);
        for (std::size_t i = 0; i < r; ++i) s[i] = A(i, r);
        for (std::size_t p = 0; p < r; ++p) {
            K acc = zero;
            for (std::size_t j = 0; j < r; ++j)
                if (!is_zero(A(r, j)) && !is_zero(s[j])) acc = acc + A(r, j) * s[j];
            c[p + 2] = -acc;
            if (p + 1 == r) break;
            std::vector<K> t(r, zero);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j)
                    if (!is_zero(A(i, j)) && !is_zero(s[j])) t[i] = t[i] + A(i, j) * s[j];
            s = std::move(t);
        }
        std::vector<K> next(r + 2, zero);
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j)
                if (!is_zero(c[i - j]) && !is_zero(vect[j])) next[i] = next[i] + c[i - j] * vect[j];
        vect = std::move(next);
    }
    std::vector<K> asc(vect.rbegin(), vect.rend());
    return UPoly<K>(std::move(asc), zero);
}

/// Laplace expansion along the first row; exponential, meant for cross-checks on tiny matrices.
template <class K>
K det_laplace(const Matrix<K>& A) {
    if (!A.is_square()) throw ShapeError("determinant of non-square matrix");
    const std::size_t n = A.rows();
    if (n == 0) return one_like(A.zero());
    if (n == 1) return A(0, 0);
    K acc = A.zero();
    for (std::size_t j = 0; j < n; ++j) {
        if (is_zero(A(0, j))) continue;
        std::vector<std::size_t> rs, cs;
        for (std::size_t i = 1; i < n; ++i) rs.push_back(i);
        for (std::size_t l = 0; l < n; ++l)
            if (l != j) cs.push_back(l);
        K term = A(0, j) * det_laplace(A.submatrix(rs, cs));
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

/// det(XI - M) by cofactor expansion over K[X].
template <class K>
UPoly<K> charpoly_laplace(const Matrix<K>& A) {
    const K zero = A.zero();
    Matrix<UPoly<K>> B(A.rows(), A.cols(), UPoly<K>(zero));
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            B(i, j) = (i == j) ? UPoly<K>::linear(A(i, j)) : UPoly<K>::constant(-A(i, j));
    return det_laplace(B);
}

/// charpoly of a matrix over F_q(T); runs over F_q[T] when every entry is a polynomial.
inline UPoly<RatFunc> charpoly(const MatrixQ& M) {
    if (!M.is_square()) throw ShapeError("charpoly of non-square matrix");
    bool polynomial = true;
    for (std::size_t i = 0; i < M.rows() && polynomial; ++i)
        for (std::size_t j = 0; j < M.cols(); ++j)
            if (!M(i, j).is_poly()) { polynomial = false; break; }
    if (polynomial) {
        const GaloisField& F = M.zero().field();
        auto P = M.map([](const RatFunc& x) { return x.num(); });
        return to_ratfunc(berkowitz(P), F);
    }
    return berkowitz(M);
}

/// Monic annihilating polynomial of v of least degree (Krylov sequence v, Mv, M^2 v, ...).
template <class K>
UPoly<K> vector_minpoly(const Matrix<K>& M, const Vec<K>& v, std::vector<Vec<K>>* krylov = nullptr) {
    const std::size_t n = M.rows();
    const K zero = M.zero(), one = one_like(zero);
    // rows: reduced vector + combination of w_0..w_j that produced it
    std::vector<Vec<K>> red, comb;
    std::vector<std::size_t> piv;
    Vec<K> w = v;
    for (std::size_t j = 0; j <= n; ++j) {
        Vec<K> r = w;
        Vec<K> c(n + 1, zero);
        c[j] = one;
        for (std::size_t b = 0; b < red.size(); ++b) {
            if (is_zero(r[piv[b]])) continue;
            const K f = r[piv[b]] / red[b][piv[b]];
            for (std::size_t i = 0; i < n; ++i)
                if (!is_zero(red[b][i])) r[i] = r[i] - f * red[b][i];
            for (std::size_t i = 0; i <= j; ++i)
                if (!is_zero(comb[b][i])) c[i] = c[i] - f * comb[b][i];
        }
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!is_zero(r[i])) { p = i; break; }
        if (p == n) {
            c.resize(j + 1);
            return UPoly<K>(std::move(c), zero);
        }
        if (krylov) krylov->push_back(w);
        red.push_back(std::move(r));
        comb.push_back(std::move(c));
        piv.push_back(p);
        w = M * w;
    }
    throw InternalError("Krylov sequence did not terminate");
}

/// Minimal polynomial as the lcm of the minimal polynomials of standard basis vectors. Seeds that
/// already lie in the accumulated (M-invariant) Krylov span are skipped.
template <class K>
UPoly<K> minpoly(const Matrix<K>& M) {
    if (!M.is_square()) throw ShapeError("minpoly of non-square matrix");
    const std::size_t n = M.rows();
    const K zero = M.zero(), one = one_like(zero);
    UPoly<K> result = UPoly<K>::constant(one);
    SpanBuilder<K> span(n);
    for (std::size_t i = 0; i < n && span.size() < n; ++i) {
        Vec<K> e(n, zero);
        e[i] = one;
        if (span.contains(e)) continue;
        std::vector<Vec<K>> kr;
        UPoly<K> m = vector_minpoly(M, e, &kr);
        for (const auto& w : kr) span.add(w);
        result = UPoly<K>::lcm(result, m);
    }
    return result;
}

}  // namespace dhecke

#endif
