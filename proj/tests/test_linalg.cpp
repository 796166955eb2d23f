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

#include "dhecke/charpoly.hpp"

using namespace dhecke;

namespace {

RatFunc P(const GaloisField& F, std::initializer_list<long long> c) { return RatFunc(Poly::from_ints(F, c)); }

MatrixQ random_matrix(const GaloisField& F, std::size_t r, std::size_t c, std::mt19937& rng, int maxdeg) {
    MatrixQ M(r, c, RatFunc(Poly(F)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            std::vector<std::uint32_t> v(rng() % (maxdeg + 2));
            for (auto& x : v) x = rng() % F.size();
            M(i, j) = RatFunc(Poly(F, v));
        }
    return M;
}

// Hecke matrix for q=2, k=5, P=1+T.
MatrixQ example_two() {
    const auto& F = GaloisField::get(2);
    return MatrixQ::from_rows({{P(F, {1}), P(F, {0}), P(F, {0}), P(F, {0})},
                               {P(F, {0, 0, 1}), P(F, {1}), P(F, {0, 0, 1}), P(F, {0, 0, 0, 1})},
                               {P(F, {0, 1}), P(F, {0, 1}), P(F, {1}), P(F, {0, 0, 0, 1})},
                               {P(F, {0}), P(F, {0}), P(F, {0}), P(F, {1})}},
                              P(F, {0}));
}

}  // namespace

TEST_CASE("nullspace examples", "[linalg]") {
    const auto& F = GaloisField::get(2);
    const RatFunc z = P(F, {0});
    REQUIRE(nullspace(MatrixQ(2, 2, z)).size() == 2);
    REQUIRE(nullspace(MatrixQ::identity(2, z)).empty());
    auto ns = nullspace(MatrixQ::from_rows({{P(F, {1}), P(F, {1})}, {P(F, {1}), P(F, {1})}}, z));
    REQUIRE(ns.size() == 1);
    REQUIRE(ns[0] == Vec<RatFunc>{P(F, {1}), P(F, {1})});
}

TEST_CASE("rank-nullity on random matrices", "[linalg]") {
    std::mt19937 rng(3);
    for (const char* q : {"2", "3", "4", "5"}) {
        const auto& F = GaloisField::parse(q);
        for (int it = 0; it < 30; ++it) {
            const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
            auto M = random_matrix(F, r, c, rng, 3);
            // force some dependency
            if (r > 1 && it % 2) for (std::size_t j = 0; j < c; ++j) M(r - 1, j) = M(0, j) * P(F, {0, 1});
            auto ns = nullspace(M);
            REQUIRE(rank(M) + ns.size() == c);
            for (const auto& v : ns)
                for (const auto& x : M * v) REQUIRE(x.is_zero());
            if (!ns.empty()) REQUIRE(rank(MatrixQ::from_columns(ns, c, M.zero())) == ns.size());
        }
    }
}

TEST_CASE("charpoly small examples", "[charpoly]") {
    const auto& F = GaloisField::get(3);
    const RatFunc z = P(F, {0});
    auto D = MatrixQ::from_rows({{P(F, {1}), z}, {z, P(F, {1, 1})}}, z);
    auto expect = UPoly<RatFunc>::linear(P(F, {1})) * UPoly<RatFunc>::linear(P(F, {1, 1}));
    REQUIRE(charpoly(D) == expect);
    auto one = MatrixQ::from_rows({{P(F, {2, 0, 1})}}, z);
    REQUIRE(charpoly(one) == UPoly<RatFunc>::linear(P(F, {2, 0, 1})));
    REQUIRE_THROWS_AS(charpoly(MatrixQ(2, 3, z)), ShapeError);
}

TEST_CASE("Berkowitz agrees with cofactor expansion", "[charpoly]") {
    std::mt19937 rng(5);
    for (const char* q : {"2", "3", "4", "7"}) {
        const auto& F = GaloisField::parse(q);
        for (std::size_t n = 1; n <= 4; ++n)
            for (int it = 0; it < 8; ++it) {
                auto M = random_matrix(F, n, n, rng, 2);
                auto cp = charpoly(M);
                REQUIRE(cp == charpoly_laplace(M));
                REQUIRE(cp.degree() == static_cast<int>(n));
                REQUIRE(cp.lead().is_one());
            }
    }
}

TEST_CASE("minpoly divides charpoly", "[charpoly]") {
    std::mt19937 rng(9);
    for (const char* q : {"2", "3", "5"}) {
        const auto& F = GaloisField::parse(q);
        for (std::size_t n = 1; n <= 5; ++n)
            for (int it = 0; it < 6; ++it) {
                auto M = random_matrix(F, n, n, rng, 1);
                if (it % 3 == 0) {
                    // block with repeated structure so minpoly is a proper divisor
                    for (std::size_t i = 0; i < n; ++i)
                        for (std::size_t j = 0; j < n; ++j) M(i, j) = (i == j) ? P(F, {1, 1}) : P(F, {0});
                }
                auto mp = minpoly(M);
                auto cp = charpoly(M);
                REQUIRE(mp.divides(cp));
                // mp(M) = 0
                auto acc = MatrixQ(n, n, M.zero());
                auto pw = MatrixQ::identity(n, M.zero());
                for (const auto& c : mp.coeffs()) {
                    acc = acc + pw.scaled(c);
                    pw = pw * M;
                }
                REQUIRE(acc.is_zero_matrix());
            }
    }
}

TEST_CASE("minpoly examples", "[charpoly]") {
    const auto& F = GaloisField::get(5);
    const RatFunc z = P(F, {0});
    REQUIRE(minpoly(MatrixQ::identity(4, z)) == UPoly<RatFunc>::linear(P(F, {1})));
    auto J = MatrixQ::from_rows({{P(F, {1}), P(F, {1})}, {z, P(F, {1})}}, z);
    REQUIRE(minpoly(J) == UPoly<RatFunc>::linear(P(F, {1})).pow(2));
}

TEST_CASE("separability", "[charpoly]") {
    const auto& F2 = GaloisField::get(2);
    REQUIRE(upoly_separable(UPoly<RatFunc>::linear(P(F2, {1}))));
    // X^2 + 1 + T^3
    UPoly<RatFunc> f({P(F2, {1, 0, 0, 1}), P(F2, {0}), P(F2, {1})}, P(F2, {0}));
    REQUIRE_FALSE(upoly_separable(f));
    auto g = UPoly<RatFunc>::linear(P(F2, {1})) * UPoly<RatFunc>::linear(P(F2, {1, 1}));
    REQUIRE(upoly_separable(g));
    REQUIRE_THROWS_AS(upoly_separable(UPoly<RatFunc>(P(F2, {0}))), InvalidInput);
}

TEST_CASE("q=2 k=5 printed matrix: charpoly and minpoly", "[charpoly]") {
    const auto& F2 = GaloisField::get(2);
    auto M = example_two();
    auto xm1 = UPoly<RatFunc>::linear(P(F2, {1}));
    UPoly<RatFunc> quad({P(F2, {1, 0, 0, 1}), P(F2, {0}), P(F2, {1})}, P(F2, {0}));
    REQUIRE(charpoly(M) == xm1 * xm1 * quad);
    REQUIRE(charpoly_laplace(M) == xm1 * xm1 * quad);
    REQUIRE(minpoly(M) == xm1 * quad);
}
