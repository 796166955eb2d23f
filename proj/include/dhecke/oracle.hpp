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
 * @file oracle.hpp
 * @brief Brute-force Hecke action on the tree, used to check the closed forms.
 *
 * A cocycle is stored by its values on the rays of a fundamental domain. Values on
 * unstable ray edges come from harmonicity at each ray vertex, whose stabilizer moves
 * the incoming ray edge onto the other q-1 outward neighbours. Any other edge is
 * carried onto the domain by a bounded search over group elements.
 *
 * Functional values are (k-1) x dim matrices: row i holds c(e)(X^i Y^{k-2-i}) as a
 * linear form in the cocycle coordinates.
 */

#ifndef DHECKE_ORACLE_HPP
#define DHECKE_ORACLE_HPP

#include <map>
#include <optional>

#include "hecke.hpp"
#include "tree.hpp"

namespace dhecke {

/// Matrix of w -> g.w on Hom(V(k,m), C) in the monomial basis:
/// (g w)(X^j Y^{k-2-j}) = det^{1-m} w((aX+bY)^j (cX+dY)^{k-2-j}).
inline MatrixQ dual_action(const RatFunc& a, const RatFunc& b, const RatFunc& c, const RatFunc& d, int k, int m) {
    const RatFunc zero = a.zero();
    const int n = k - 1;
    const RatFunc det = a * d - b * c;
    if (det.is_zero()) throw InvalidInput("dual action of a singular matrix");
    const RatFunc scale = det.pow(1 - m);
    // ascending coefficient lists in X (Y = 1)
    auto mul = [&](const std::vector<RatFunc>& u, const std::vector<RatFunc>& v) {
        std::vector<RatFunc> r(u.size() + v.size() - 1, zero);
        for (std::size_t i = 0; i < u.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j) r[i + j] += u[i] * v[j];
        return r;
    };
    std::vector<std::vector<RatFunc>> pa{{a.one()}}, pc{{a.one()}};
    for (int i = 1; i <= k - 2; ++i) {
        pa.push_back(mul(pa.back(), {b, a}));
        pc.push_back(mul(pc.back(), {d, c}));
    }
    MatrixQ D(n, n, zero);
    for (int j = 0; j < n; ++j) {
        const auto prod = mul(pa[j], pc[k - 2 - j]);
        for (int i = 0; i < n; ++i) D(j, i) = scale * prod[i];
    }
    return D;
}
inline MatrixQ dual_action(const Mat2& g, int k, int m) {
    return dual_action(RatFunc(g.a), RatFunc(g.b), RatFunc(g.c), RatFunc(g.d), k, m);
}

struct FdHit {
    int ray = 0;
    int index = 0;
    int sign = 1;  // +1 when the edge points away from the centre of the domain
};

/// Gamma_1(T): the line (n,0), ray 0 runs to the cusp 0 starting with g0 = (0,0)->(1,0),
/// ray 1 runs to infinity starting with the reversed g0.
/// Gamma(T): a star at (0,0); ray pos runs to the cusp r = pos-th element in generator
/// order starting with g_r = (0,0)->(1,r); ray q runs to infinity starting with
/// g_inf = (0,0)->(-1,0).
class FundamentalDomain {
   public:
    FundamentalDomain(GroupKind g, const GaloisField& F) : group_(g), F_(&F), rs_(F.elements_generator_order()) {}

    GroupKind group() const { return group_; }
    int rays() const { return group_ == GroupKind::Gamma1T ? 2 : static_cast<int>(F_->size()) + 1; }
    std::string ray_label(int ray) const {
        if (group_ == GroupKind::Gamma1T) return ray == 0 ? "[0]" : "[inf]";
        if (ray == static_cast<int>(F_->size())) return "[inf]";
        return "[" + F_->to_string(rs_[ray]) + "]";
    }
    /// i-th edge of a ray, directed outward.
    TreeEdge ray_edge(int ray, int i) const {
        const GaloisField& F = *F_;
        const LaurentNum zero(F);
        if (group_ == GroupKind::Gamma1T) {
            if (ray == 0) return TreeEdge(TreeVertex(i, zero), TreeVertex(i + 1, zero));
            return TreeEdge(TreeVertex(1 - i, zero), TreeVertex(-i, zero));
        }
        if (ray == static_cast<int>(F.size())) return TreeEdge(TreeVertex(-i, zero), TreeVertex(-i - 1, zero));
        const LaurentNum r = LaurentNum::monomial(F, rs_[ray], 0);
        return TreeEdge(TreeVertex(i, r), TreeVertex(i + 1, r));
    }
    /// For i >= 1: stabilizer elements of tail(ray_edge(ray, i)) carrying ray_edge(ray, i-1)
    /// onto each edge that ends there, except the reversed ray_edge(ray, i). Identity first.
    std::vector<Mat2> step_reps(int ray, int i) const {
        const GaloisField& F = *F_;
        std::vector<Mat2> out;
        const Poly one = Poly::constant(F, 1), zero(F);
        for (std::uint32_t g : F.elements()) {
            if (group_ == GroupKind::Gamma1T) {
                if (ray == 0) out.push_back({one, zero, Poly::monomial(F, g, i), one});
                else out.push_back({one, Poly::monomial(F, g, i - 1), zero, one});
                continue;
            }
            if (ray == static_cast<int>(F.size())) {
                out.push_back({one, Poly::monomial(F, g, i), zero, one});
                continue;
            }
            // (1 r; 0 1)(1 0; c 1)(1 -r; 0 1) with c = g T^i
            const std::uint32_t r = rs_[ray];
            const Poly c = Poly::monomial(F, g, i);
            out.push_back({one + c.scaled(r), (-c).scaled(F.mul(r, r)), c, one - c.scaled(r)});
        }
        return out;
    }

    /// Cheap necessary condition for a vertex to lie on the domain.
    bool vertex_on_domain(const TreeVertex& v) const {
        if (group_ == GroupKind::Gamma1T || v.n <= 0) return v.u.is_zero();
        return v.u.is_zero() || (v.u.valuation() == 0 && v.u.top() == 0);
    }

    std::optional<FdHit> locate(const TreeEdge& e) const {
        const bool asc = e.head.n > e.tail.n;
        const TreeVertex& lo = asc ? e.tail : e.head;
        const TreeVertex& hi = asc ? e.head : e.tail;
        if (group_ == GroupKind::Gamma1T) {
            if (!hi.u.is_zero()) return std::nullopt;
            if (lo.n >= 0) return FdHit{0, lo.n, asc ? 1 : -1};
            return FdHit{1, -lo.n, asc ? -1 : 1};
        }
        if (hi.n >= 1) {
            if (!vertex_on_domain(hi)) return std::nullopt;
            const std::uint32_t r = hi.u.is_zero() ? 0 : hi.u.coeff(0);
            const int pos = static_cast<int>(F_->position_in_generator_order(r));
            return FdHit{pos, hi.n - 1, asc ? 1 : -1};
        }
        if (!hi.u.is_zero()) return std::nullopt;
        return FdHit{static_cast<int>(F_->size()), -hi.n, asc ? -1 : 1};
    }

   private:
    GroupKind group_;
    const GaloisField* F_;
    std::vector<std::uint32_t> rs_;
};

struct ReduceResult {
    Mat2 gamma;      // e = gamma . (fd edge, oriented by sign)
    FdHit hit;
    TreeEdge fd_edge;  // outward ray edge
};

/// Finds gamma in the group (entry degree <= depth, first in enumeration order) with
/// gamma^{-1} e on the fundamental domain. Re-verifies act(gamma, .) before returning.
inline ReduceResult reduce(const TreeEdge& e, const FundamentalDomain& fd, int depth) {
    if (depth < 0) throw InvalidInput("depth must be >= 0");
    const GaloisField& F = e.tail.u.field();
    for (const Mat2& delta : group_elements(fd.group(), F, depth)) {
        const LMat2 L = LMat2::from(delta);
        const TreeVertex t = act(L, e.tail);
        if (!fd.vertex_on_domain(t)) continue;
        const TreeVertex h = act(L, e.head);
        if (!fd.vertex_on_domain(h)) continue;
        const TreeEdge f(t, h);
        auto hit = fd.locate(f);
        if (!hit) continue;
        const Mat2 gamma = delta.inverse();
        const TreeEdge base = fd.ray_edge(hit->ray, hit->index);
        const TreeEdge oriented = hit->sign > 0 ? base : base.reversed();
        if (!(act(gamma, oriented) == e)) throw InternalError("reduction failed its own check");
        return {gamma, *hit, base};
    }
    throw NotFoundWithinDepth("no group element of degree <= " + std::to_string(depth) + " reduces " + e.to_string());
}
inline ReduceResult reduce(const TreeEdge& e, GroupKind group, int depth) {
    return reduce(e, FundamentalDomain(group, e.tail.u.field()), depth);
}

/// Values of the basis cocycles on the domain rays.
class FundamentalDomainTable {
   public:
    static constexpr int kMaxRadius = 64;

    explicit FundamentalDomainTable(const SpaceSpec& spec) : spec_(spec.with_layer(Layer::Cuspidal)), fd_(spec.group, spec.field()) {
        const GaloisField& F = spec_.field();
        const int k = spec_.k, n = k - 1;
        const std::size_t dim = spec_.coord_dim();
        const RatFunc zero = spec_.zero();
        std::vector<MatrixQ> start;
        if (spec_.group == GroupKind::Gamma1T) {
            start.push_back(MatrixQ::identity(n, zero));
            start.push_back(MatrixQ::identity(n, zero).scaled(-spec_.one()));
        } else {
            MatrixQ inf(n, dim, zero);
            const auto rs = F.elements_generator_order();
            for (std::size_t pos = 0; pos < rs.size(); ++pos) {
                // c(g_r)(X^i Y^{k-2-i}) = sum_j C(i,j) r^{i-j} Z(c, r, j)
                const MatrixQ Bt = basis_change_xy_to_shifted(rs[pos], k, F).transpose();
                MatrixQ V(n, dim, zero);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) V(i, gammaT_index(pos, j, k)) = Bt(i, j);
                inf = inf - V;
                start.push_back(std::move(V));
            }
            start.push_back(std::move(inf));
        }
        for (int ray = 0; ray < fd_.rays(); ++ray) {
            std::vector<MatrixQ> vals{start[ray]};
            for (int i = 1;; ++i) {
                if (i > kMaxRadius) throw InvariantViolation("harmonic extension along ray " + fd_.ray_label(ray) + " does not vanish");
                MatrixQ next(n, dim, zero);
                for (const Mat2& g : fd_.step_reps(ray, i)) next = next + dual_action(g, k, spec_.m) * vals.back();
                if (next.is_zero_matrix()) break;
                vals.push_back(std::move(next));
            }
            values_.push_back(std::move(vals));
        }
    }

    const SpaceSpec& spec() const { return spec_; }
    const FundamentalDomain& domain() const { return fd_; }
    /// Number of ray edges carrying a nonzero value.
    int support(int ray) const { return static_cast<int>(values_[ray].size()); }
    MatrixQ value(int ray, int index) const {
        if (index < support(ray)) return values_[ray][index];
        return MatrixQ(spec_.k - 1, spec_.coord_dim(), spec_.zero());
    }

   private:
    SpaceSpec spec_;
    FundamentalDomain fd_;
    std::vector<std::vector<MatrixQ>> values_;
};

/// Evaluates the basis cocycles on arbitrary edges; reductions are cached.
class TreeOracle {
   public:
    TreeOracle(const SpaceSpec& spec, int depth, int max_depth = -1)
        : table_(spec), depth_(depth), max_depth_(max_depth < 0 ? depth + 2 : max_depth) {}

    const FundamentalDomainTable& table() const { return table_; }
    const SpaceSpec& spec() const { return table_.spec(); }

    /// Searches with the configured depth, escalating up to max_depth.
    const ReduceResult& reduce_cached(const TreeEdge& e) {
        auto it = cache_.find(e);
        if (it != cache_.end()) return it->second;
        for (int d = depth_;; ++d) {
            try {
                return cache_.emplace(e, reduce(e, table_.domain(), d)).first->second;
            } catch (const NotFoundWithinDepth&) {
                if (d >= max_depth_) throw;
            }
        }
    }

    /// (k-1) x dim matrix of c(e)(X^i Y^{k-2-i}).
    MatrixQ eval(const TreeEdge& e) {
        const ReduceResult& r = reduce_cached(e);
        const MatrixQ V = table_.value(r.hit.ray, r.hit.index);
        if (V.is_zero_matrix()) return V;
        MatrixQ out = dual_action(r.gamma, spec().k, spec().m) * V;
        return r.hit.sign > 0 ? out : out.scaled(-spec().one());
    }

    /// T_P c at e, literally from the coset representatives of the double coset of diag(P, 1).
    MatrixQ hecke_eval(const HeckePrime& prime, const TreeEdge& e) {
        const SpaceSpec& s = spec();
        const GaloisField& F = s.field();
        const int k = s.k, m = s.m, d = prime.degree();
        const Poly& P = prime.P;
        const Poly one = Poly::constant(F, 1), zero(F);
        std::vector<Mat2> reps{{P, zero, zero, one}};
        for (const Poly& b : detail::polys_up_to(F, d - 1, -1)) reps.push_back({one, b * (one - P), zero, P});
        MatrixQ acc(k - 1, s.coord_dim(), s.zero());
        for (const Mat2& h : reps) {
            const MatrixQ V = eval(act(h, e));
            if (V.is_zero_matrix()) continue;
            // h^{-1} = det^{-1} (d -b; -c a)
            const RatFunc inv_det = RatFunc(h.det()).inv();
            const MatrixQ Dinv = dual_action(RatFunc(h.d) * inv_det, RatFunc(-h.b) * inv_det, RatFunc(-h.c) * inv_det,
                                             RatFunc(h.a) * inv_det, k, m);
            acc = acc + Dinv * V;
        }
        return acc.scaled(RatFunc(P).pow(k - m - 1));
    }

    /// Matrix of T_P in the coordinates of the cocycle-spaces module.
    MatrixQ hecke_matrix(const HeckePrime& prime) {
        const SpaceSpec& s = spec();
        const GaloisField& F = s.field();
        if (prime.F != s.F) throw InvalidInput("prime and space use different fields");
        const FundamentalDomain& fd = table_.domain();
        if (s.group == GroupKind::Gamma1T) return hecke_eval(prime, fd.ray_edge(0, 0));
        const int k = s.k, n = k - 1;
        const auto rs = F.elements_generator_order();
        MatrixQ M(s.coord_dim(), s.coord_dim(), s.zero());
        for (std::size_t pos = 0; pos < rs.size(); ++pos) {
            const MatrixQ W = functional_xy_to_shifted(rs[pos], k, F) * hecke_eval(prime, fd.ray_edge(static_cast<int>(pos), 0));
            for (int j = 0; j < n; ++j)
                for (std::size_t c = 0; c < s.coord_dim(); ++c) M(gammaT_index(pos, j, k), c) = W(j, c);
        }
        return M;
    }

   private:
    FundamentalDomainTable table_;
    int depth_, max_depth_;
    std::map<TreeEdge, ReduceResult> cache_;
};

/// c(e) as a functional-value vector in the monomial basis.
inline Vec<RatFunc> cocycle_eval(const CocycleVector& c, const TreeEdge& e, TreeOracle& oracle) {
    if (!(c.spec.with_layer(Layer::Cuspidal) == oracle.spec())) throw GroupMismatch("cocycle and oracle use different spaces");
    return oracle.eval(e) * c.coords;
}

inline Vec<RatFunc> hecke_apply_oracle(const CocycleVector& c, const HeckePrime& prime, const TreeEdge& e, TreeOracle& oracle) {
    if (!(c.spec.with_layer(Layer::Cuspidal) == oracle.spec())) throw GroupMismatch("cocycle and oracle use different spaces");
    return oracle.hecke_eval(prime, e) * c.coords;
}

inline MatrixQ oracle_hecke_matrix(const SpaceSpec& spec, const HeckePrime& prime, int depth = 3) {
    TreeOracle o(spec, depth);
    return o.hecke_matrix(prime);
}

}  // namespace dhecke

#endif
