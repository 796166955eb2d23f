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

#include <catch_amalgamated.hpp>

#include <random>

#include "dhecke/oracle.hpp"

using namespace dhecke;

namespace {
Poly P(const GaloisField& F, std::initializer_list<long long> c) { return Poly::from_ints(F, c); }
TreeVertex V(const GaloisField& F, int n, std::initializer_list<std::pair<std::uint32_t, int>> terms = {}) {
    LaurentNum u(F);
    for (auto [c, e] : terms) u = u + LaurentNum::monomial(F, c, e);
    return TreeVertex(n, u);
}
}  // namespace

TEST_CASE("LaurentNum arithmetic", "[tree]") {
    const auto& F = GaloisField::get(3);
    const auto t = LaurentNum::from_poly(P(F, {0, 1}));
    REQUIRE(t.valuation() == -1);
    // 1/(1+T) = pi - pi^2 + pi^3 - ...
    const auto x = LaurentNum::from_ratfunc(RatFunc(P(F, {1}), P(F, {1, 1})), 6);
    REQUIRE(x.valuation() == 1);
    REQUIRE(x.coeff(1) == 1);
    REQUIRE(x.coeff(2) == 2);
    REQUIRE(x.coeff(4) == 2);
    REQUIRE(x.coeff(5) == 1);
    REQUIRE(x.precision() == 6);
    REQUIRE_THROWS_AS(x.coeff(6), PrecisionError);
    const auto y = x * LaurentNum::from_poly(P(F, {1, 1}));
    REQUIRE(y.coeff(0) == 1);
    for (int e = 1; e < y.precision(); ++e) REQUIRE(y.coeff(e) == 0);
    REQUIRE_FALSE(y.is_exact());
    const LaurentNum unknown(F, 4);
    REQUIRE(unknown.is_zero());
    REQUIRE_FALSE(unknown.is_exact_zero());
    REQUIRE_THROWS_AS(unknown.valuation(), PrecisionError);
    REQUIRE_THROWS_AS(x.truncated(7), PrecisionError);
    REQUIRE(LaurentNum::from_poly(P(F, {2, 0, 1})).to_ratfunc() == RatFunc(P(F, {2, 0, 1})));
}

TEST_CASE("vertices and edges", "[tree]") {
    const auto& F = GaloisField::get(2);
    const auto o = origin_vertex(F);
    REQUIRE(o.neighbours().size() == 3);
    for (const auto& w : o.neighbours()) REQUIRE(o.adjacent(w));
    REQUIRE_FALSE(o.adjacent(V(F, 2)));
    REQUIRE_THROWS_AS(TreeEdge(o, V(F, 2)), InvalidInput);
    // the representative u is cut to exponents < n
    REQUIRE(V(F, 1, {{1, 1}, {1, -2}}) == V(F, 1, {{1, -2}}));
}

TEST_CASE("edge normal forms of fixed matrices", "[tree]") {
    const auto& F = GaloisField::get(3);
    const Poly one = P(F, {1}), zero = P(F, {0});
    // the convention: <I> runs from (0; 0) to (-1; 0)
    REQUIRE(edge_of_matrix(Mat2::identity(F)) == TreeEdge(V(F, 0), V(F, -1)));
    // <(0 1; 1 0)> runs from (0; 0) to (1; 0)
    REQUIRE(edge_of_matrix(Mat2{zero, one, one, zero}) == TreeEdge(V(F, 0), V(F, 1)));
    // <(r 1; 1 0)> runs from (0; 0) to (1; r)
    REQUIRE(edge_of_matrix(Mat2{P(F, {2}), one, one, zero}) == TreeEdge(V(F, 0), V(F, 1, {{2, 0}})));
    // (pi^n u; 0 1) has tail (n; u)
    REQUIRE(edge_of_matrix(Mat2{one, P(F, {0, 1}), zero, one}).tail == V(F, 0, {{1, -1}}));
}

TEST_CASE("Iwahori invariance", "[tree]") {
    const auto& F = GaloisField::get(3);
    const RatFunc one(P(F, {1})), zero(P(F, {0})), T(P(F, {0, 1}));
    const RatFunc pi = one / T;
    const auto base = edge_of_matrix(one, zero, zero, T);
    // right multiplication by (1 0; pi 1), (1 b; 0 1) with b in O, and diag(units)
    REQUIRE(edge_of_matrix(one, zero, pi * T, T) == base);
    const RatFunc b = one / (one + T);
    REQUIRE(edge_of_matrix(one, b, zero, T) == base);
    const RatFunc u = one + pi;
    REQUIRE(edge_of_matrix(u, zero, zero, T * RatFunc::from_int(F, 2)) == base);
    // scalars do not move the edge
    REQUIRE(edge_of_matrix(T, zero, zero, T * T) == base);
}

TEST_CASE("group action laws", "[tree]") {
    for (const char* q : {"2", "3", "4"}) {
        const auto& F = GaloisField::parse(q);
        const auto& G = group_elements(GroupKind::Gamma1T, F, 2);
        std::mt19937 rng(5);
        const TreeEdge e0 = edge_of_matrix(Mat2::identity(F));
        for (int trial = 0; trial < 40; ++trial) {
            const Mat2& g = G[rng() % G.size()];
            const Mat2& h = G[rng() % G.size()];
            const TreeEdge e = act(G[rng() % G.size()], e0);
            REQUIRE(act(g * h, e) == act(g, act(h, e)));
            REQUIRE(act(g.inverse(), act(g, e)) == e);
            REQUIRE(act(Mat2::identity(F), e) == e);
            REQUIRE(act(g, e.reversed()) == act(g, e).reversed());
            REQUIRE(act(g, e0) == edge_of_matrix(g));
        }
    }
}

TEST_CASE("group membership and enumeration", "[tree]") {
    const auto& F = GaloisField::get(3);
    const Poly one = P(F, {1}), zero = P(F, {0}), T = P(F, {0, 1});
    REQUIRE(in_group(Mat2{one, T, zero, one}, GroupKind::Gamma1T));
    REQUIRE_FALSE(in_group(Mat2{one, one, zero, one}, GroupKind::GammaT));
    REQUIRE(in_group(Mat2{one, one, zero, one}, GroupKind::Gamma1T));
    REQUIRE_FALSE(in_group(Mat2{P(F, {2}), zero, zero, P(F, {2})}, GroupKind::Gamma1T));
    for (GroupKind g : {GroupKind::Gamma1T, GroupKind::GammaT})
        for (const auto& m : group_elements(g, F, 2)) {
            REQUIRE(in_group(m, g));
            REQUIRE(m.max_degree() <= 2);
        }
}

TEST_CASE("reduce examples", "[tree]") {
    const auto& F = GaloisField::get(3);
    const Poly one = P(F, {1}), zero = P(F, {0}), T = P(F, {0, 1});
    const FundamentalDomain fd(GroupKind::Gamma1T, F);
    const TreeEdge g0 = edge_of_matrix(Mat2{zero, one, one, zero});
    REQUIRE(fd.ray_edge(0, 0) == g0);

    auto r = reduce(g0, fd, 2);
    REQUIRE(r.gamma == Mat2::identity(F));
    REQUIRE(r.hit.ray == 0);
    REQUIRE(r.hit.index == 0);
    REQUIRE(r.hit.sign == 1);

    auto rr = reduce(g0.reversed(), fd, 2);
    REQUIRE(rr.gamma == Mat2::identity(F));
    REQUIRE(rr.hit.sign == -1);

    const Mat2 u{one, T, zero, one};
    auto ru = reduce(act(u, g0), fd, 2);
    REQUIRE(ru.gamma == u);
    REQUIRE(ru.hit.ray == 0);
    REQUIRE(ru.hit.index == 0);
    REQUIRE(ru.hit.sign == 1);

    // soundness on a batch of translates
    std::mt19937 rng(11);
    const auto& G = group_elements(GroupKind::Gamma1T, F, 1);
    for (int trial = 0; trial < 30; ++trial) {
        const TreeEdge e = act(G[rng() % G.size()], fd.ray_edge(static_cast<int>(rng() % 2), static_cast<int>(rng() % 3)));
        auto res = reduce(e, fd, 2);
        const TreeEdge base = res.hit.sign > 0 ? res.fd_edge : res.fd_edge.reversed();
        REQUIRE(act(res.gamma, base) == e);
    }
    REQUIRE_THROWS_AS(reduce(g0, fd, -1), InvalidInput);
}

TEST_CASE("reduce gives up past its depth", "[tree]") {
    const auto& F = GaloisField::get(2);
    const Poly one = P(F, {1}), zero = P(F, {0});
    const FundamentalDomain fd(GroupKind::GammaT, F);
    const Mat2 far{one, P(F, {0, 0, 0, 1}), zero, one};
    const TreeEdge e = act(far, fd.ray_edge(0, 0));
    REQUIRE_THROWS_AS(reduce(e, fd, 1), NotFoundWithinDepth);
    REQUIRE(reduce(e, fd, 3).gamma == far);
}
