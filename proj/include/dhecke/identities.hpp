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

// Finite-field summation identities used by the weight 3, 4, 5 analysis of Gamma(T).

#ifndef DHECKE_IDENTITIES_HPP
#define DHECKE_IDENTITIES_HPP

#include <utility>
#include <vector>

#include "matrix.hpp"

namespace dhecke {

/// sum_{n=1}^{q-2} a^{jn} / (1 - a^n)^l with a the field generator.
inline std::uint32_t binomsum(int j, int l, const GaloisField& F) {
    const int q = static_cast<int>(F.size());
    if (q < 3) throw InvalidInput("binomsum needs q >= 3");
    if (j < 1 || j > q - 1) throw InvalidInput("j out of range [1, q-1]");
    if (l < 1) throw InvalidInput("l must be >= 1");
    std::uint32_t acc = 0;
    for (int n = 1; n <= q - 2; ++n) {
        const std::uint32_t an = F.gen_pow(n);
        const std::uint32_t den = F.pow(F.sub(1, an), l);
        acc = F.add(acc, F.div(F.gen_pow(static_cast<long long>(j) * n), den));
    }
    return acc;
}

/// (-1)^{l-1} C(j, l) in the prime subfield.
inline std::uint32_t binomsum_closed_form(int j, int l, const GaloisField& F) {
    const std::uint32_t b = binom_mod_p(j, l, F.characteristic());
    return (l - 1) % 2 == 0 ? b : F.neg(b);
}

/// Both sides of the double-sum identity: lhs = sum_b sum_{s != b} (b-r)^t / (s-b)^l X(s).
/// X is indexed by field element index.
inline std::pair<RatFunc, RatFunc> intersum_sides(int l, int t, const std::vector<RatFunc>& X, std::uint32_t r,
                                                  const GaloisField& F) {
    const int q = static_cast<int>(F.size());
    if (l < 1 || t < 1 || l > q - 2 || t > q - 2) throw InvalidInput("intersum needs 1 <= l, t <= q-2");
    if (X.size() != F.size()) throw InvalidInput("X must have one value per field element");
    const RatFunc zero = X[0].zero();
    auto c = [&](std::uint32_t v) { return RatFunc::constant(F, v); };
    RatFunc lhs = zero;
    for (std::uint32_t b = 0; b < F.size(); ++b) {
        const std::uint32_t br = F.pow(F.sub(b, r), t);
        if (br == 0) continue;
        for (std::uint32_t s = 0; s < F.size(); ++s) {
            if (s == b) continue;
            lhs += c(F.div(br, F.pow(F.sub(s, b), l))) * X[s];
        }
    }
    RatFunc rhs = zero;
    const std::uint32_t sign = (l + 1) % 2 == 0 ? 1 : F.neg(1);
    if (t > l) {
        const std::uint32_t coef = F.mul(sign, binom_mod_p(t, l, F.characteristic()));
        for (std::uint32_t s = 0; s < F.size(); ++s) rhs += c(F.mul(coef, F.pow(F.sub(s, r), t - l))) * X[s];
    } else if (t == l) {
        for (std::uint32_t s = 0; s < F.size(); ++s) rhs += c(sign) * X[s];
    }
    return {lhs, rhs};
}

inline bool intersum_check(int l, int t, const std::vector<RatFunc>& X, std::uint32_t r, const GaloisField& F) {
    auto [lhs, rhs] = intersum_sides(l, t, X, r, F);
    return lhs == rhs;
}

/// (q-1)x(q-1) circulant with zero diagonal and entry 1/(1 - a^{(j-i) mod (q-1)}) elsewhere.
inline Matrix<Gf> circulant_matrix(const GaloisField& F) {
    const std::size_t m = F.size() - 1;
    Matrix<Gf> C(m, m, Gf(F, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j) {
                const long long d = (static_cast<long long>(j) - static_cast<long long>(i) + static_cast<long long>(m)) % m;
                C(i, j) = Gf(F, F.inv(F.sub(1, F.gen_pow(d))));
            }
    return C;
}

/// Checks C' v_j = j v_j for v_j = (1, a^j, ..., a^{(q-2)j}), j = 1..q-1.
inline bool circulant_check(const GaloisField& F) {
    if (F.size() < 3) throw InvalidInput("circulant check needs q >= 3");
    const auto C = circulant_matrix(F);
    const std::size_t m = F.size() - 1;
    for (std::size_t j = 1; j <= m; ++j) {
        Vec<Gf> v(m, Gf(F, 0));
        for (std::size_t i = 0; i < m; ++i) v[i] = Gf(F, F.gen_pow(static_cast<long long>(i * j)));
        const Gf lam(F, F.from_int(static_cast<long long>(j)));
        const auto w = C * v;
        for (std::size_t i = 0; i < m; ++i)
            if (!(w[i] == lam * v[i])) return false;
    }
    return true;
}

}  // namespace dhecke

#endif
