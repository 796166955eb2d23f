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
 * @file cocycle.hpp
 * @brief Coordinate model of cuspidal harmonic cocycles for Gamma_1(T) and Gamma(T).
 *
 * Gamma_1(T): a cocycle is fixed by its value at the stable edge g0, recorded as
 * x_j = c(g0)(X^j Y^{k-2-j}), j = 0..k-2.
 *
 * Gamma(T): a cocycle is fixed by its values at the q stable edges g_r, recorded as
 * Z(c, r, j) = c(g_r)((X - rY)^j Y^{k-2-j}). Coordinates are ordered by r in
 * generator order 0, a, a^2, ..., a^{q-1} = 1, then by j; index = pos(r)*(k-1) + j.
 */

#ifndef DHECKE_COCYCLE_HPP
#define DHECKE_COCYCLE_HPP

#include <string>
#include <vector>

#include "matrix.hpp"

namespace dhecke {

enum class GroupKind { Gamma1T, GammaT };
enum class Layer { Cuspidal, DoubleCuspidal };

inline std::string to_string(GroupKind g) { return g == GroupKind::Gamma1T ? "gamma1" : "gammaT"; }
inline std::string to_string(Layer l) { return l == Layer::Cuspidal ? "cuspidal" : "double"; }
inline GroupKind parse_group(std::string_view s) {
    if (s == "gamma1" || s == "Gamma1T" || s == "gamma1T") return GroupKind::Gamma1T;
    if (s == "gammaT" || s == "GammaT" || s == "gamma") return GroupKind::GammaT;
    throw InvalidInput("unknown group '" + std::string(s) + "' (expected gamma1 or gammaT)");
}
inline Layer parse_layer(std::string_view s) {
    if (s == "cuspidal" || s == "cusp") return Layer::Cuspidal;
    if (s == "double" || s == "double-cuspidal") return Layer::DoubleCuspidal;
    throw InvalidInput("unknown layer '" + std::string(s) + "'");
}

/// genus and number of cusps
inline std::pair<int, int> genus_cusps(GroupKind g, const GaloisField& F) {
    return g == GroupKind::Gamma1T ? std::pair{0, 2} : std::pair{0, static_cast<int>(F.size()) + 1};
}

struct SpaceSpec {
    const GaloisField* F = nullptr;
    int k = 2;
    int m = 0;  // type; carried along, never enters the matrices
    GroupKind group = GroupKind::Gamma1T;
    Layer layer = Layer::Cuspidal;

    SpaceSpec() = default;
    SpaceSpec(const GaloisField& f, int weight, GroupKind g, Layer l = Layer::Cuspidal, int type = 0)
        : F(&f), k(weight), m(type), group(g), layer(l) {
        if (k < 2) throw InvalidInput("weight must be >= 2");
    }

    const GaloisField& field() const { return *F; }
    int q() const { return static_cast<int>(F->size()); }
    /// Length of the cuspidal coordinate vector.
    std::size_t coord_dim() const {
        return group == GroupKind::Gamma1T ? static_cast<std::size_t>(k - 1) : static_cast<std::size_t>((k - 1) * q());
    }
    SpaceSpec with_layer(Layer l) const {
        SpaceSpec s = *this;
        s.layer = l;
        return s;
    }
    RatFunc zero() const { return RatFunc(Poly(*F)); }
    RatFunc one() const { return RatFunc(Poly::constant(*F, 1)); }

    friend bool operator==(const SpaceSpec& a, const SpaceSpec& b) {
        return a.F == b.F && a.k == b.k && a.m == b.m && a.group == b.group && a.layer == b.layer;
    }
};

inline std::size_t gammaT_index(std::size_t pos, int j, int k) { return pos * static_cast<std::size_t>(k - 1) + j; }

/// Dimension of the cusp forms or double cusp forms of the given weight.
inline int dim_space(const SpaceSpec& s) {
    if (s.k < 2) throw InvalidInput("weight must be >= 2");
    auto [g, h] = genus_cusps(s.group, s.field());
    if (s.layer == Layer::Cuspidal) return (s.k - 1) * (g + h - 1);
    if (s.k == 2) return g;
    return (s.k - 2) * (g + h - 1) + g - 1;
}

struct CocycleVector {
    SpaceSpec spec;
    Vec<RatFunc> coords;

    CocycleVector(SpaceSpec s, Vec<RatFunc> c) : spec(s), coords(std::move(c)) {
        if (coords.size() != spec.coord_dim()) throw ShapeError("coordinate vector has wrong length");
    }
    static CocycleVector zero(const SpaceSpec& s) { return CocycleVector(s, Vec<RatFunc>(s.coord_dim(), s.zero())); }

    friend CocycleVector operator+(const CocycleVector& a, const CocycleVector& b) {
        check(a, b);
        CocycleVector r = a;
        for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
        return r;
    }
    friend CocycleVector operator-(const CocycleVector& a, const CocycleVector& b) {
        check(a, b);
        CocycleVector r = a;
        for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
        return r;
    }
    CocycleVector scaled(const RatFunc& s) const {
        CocycleVector r = *this;
        for (auto& x : r.coords) x *= s;
        return r;
    }
    friend bool operator==(const CocycleVector& a, const CocycleVector& b) {
        return a.spec == b.spec && a.coords == b.coords;
    }

   private:
    static void check(const CocycleVector& a, const CocycleVector& b) {
        if (!(a.spec == b.spec)) throw GroupMismatch("cocycle vectors belong to different spaces");
    }
};

/// Unit-coordinate basis c_j (Gamma_1(T)) or c_j^{(r)} (Gamma(T)).
inline std::vector<CocycleVector> basis(const SpaceSpec& s) {
    if (s.layer != Layer::Cuspidal) throw InvalidInput("basis() is defined for the cuspidal layer");
    std::vector<CocycleVector> out;
    for (std::size_t i = 0; i < s.coord_dim(); ++i) {
        auto v = CocycleVector::zero(s);
        v.coords[i] = s.one();
        out.push_back(std::move(v));
    }
    return out;
}

/// Labels "c_j" or "c_j^(r)" in coordinate order; r printed as a power of the generator.
inline std::vector<std::string> basis_labels(const SpaceSpec& s) {
    std::vector<std::string> out;
    if (s.group == GroupKind::Gamma1T) {
        for (int j = 0; j <= s.k - 2; ++j) out.push_back("c_" + std::to_string(j));
        return out;
    }
    for (int pos = 0; pos < s.q(); ++pos) {
        const std::string r = pos == 0 ? "0" : (pos == s.q() - 1 ? "1" : "a^" + std::to_string(pos));
        for (int j = 0; j <= s.k - 2; ++j) out.push_back("c_" + std::to_string(j) + "^(" + r + ")");
    }
    return out;
}

/// Rows are linear functionals whose common kernel is the double-cusp layer.
inline MatrixQ double_cusp_constraints(const SpaceSpec& s) {
    const std::size_t n = s.coord_dim();
    const int k = s.k;
    if (s.group == GroupKind::Gamma1T) {
        const std::size_t rows = (k == 2) ? 1 : 2;
        MatrixQ C(rows, n, s.zero());
        C(0, 0) = s.one();
        if (k > 2) C(1, k - 2) = s.one();
        return C;
    }
    const int q = s.q();
    MatrixQ C(q + 1, n, s.zero());
    for (int pos = 0; pos < q; ++pos) C(pos, gammaT_index(pos, k - 2, k)) = s.one();
    // c(g_inf)(Y^{k-2}) = -sum_r Z(c, r, 0)
    for (int pos = 0; pos < q; ++pos) C(q, gammaT_index(pos, 0, k)) = s.one();
    return C;
}

/// Basis of the double-cusp subspace inside the cuspidal coordinates (echelon normal form).
inline std::vector<Vec<RatFunc>> double_cusp_basis(const SpaceSpec& s) { return nullspace(double_cusp_constraints(s)); }

/// Change of basis for polynomials in V: column i holds the coordinates of X^i Y^{k-2-i}
/// in the basis (X - rY)^j Y^{k-2-j}, i.e. entry (j, i) = C(i, j) r^{i-j}.
inline MatrixQ basis_change_xy_to_shifted(std::uint32_t r, int k, const GaloisField& F) {
    if (k < 2) throw InvalidInput("weight must be >= 2");
    const int n = k - 1;
    const RatFunc zero(Poly{F});
    MatrixQ B(n, n, zero);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            const std::uint32_t v = F.mul(binom_mod_p(i, j, F.characteristic()), F.pow(r, i - j));
            B(j, i) = RatFunc::constant(F, v);
        }
    return B;
}

/// For functionals: maps (c(X^iY^{k-2-i}))_i to (c((X-rY)^jY^{k-2-j}))_j, entry (j, i) = C(j, i) (-r)^{j-i}.
inline MatrixQ functional_xy_to_shifted(std::uint32_t r, int k, const GaloisField& F) {
    const int n = k - 1;
    const RatFunc zero(Poly{F});
    MatrixQ S(n, n, zero);
    const std::uint32_t mr = F.neg(r);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i <= j; ++i)
            S(j, i) = RatFunc::constant(F, F.mul(binom_mod_p(j, i, F.characteristic()), F.pow(mr, j - i)));
    return S;
}

}  // namespace dhecke

#endif
