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

#include "dhecke/identities.hpp"

using namespace dhecke;

TEST_CASE("binomsum examples", "[identities]") {
    REQUIRE(binomsum(1, 1, GaloisField::get(3)) == 1);
    REQUIRE(binomsum(2, 3, GaloisField::get(5)) == 0);
    // -C(3,2) = -3 = 1 in characteristic 2
    REQUIRE(binomsum(3, 2, GaloisField::get(2, 2)) == 1);
    REQUIRE_THROWS_AS(binomsum(0, 1, GaloisField::get(5)), InvalidInput);
    REQUIRE_THROWS_AS(binomsum(1, 0, GaloisField::get(5)), InvalidInput);
    REQUIRE_THROWS_AS(binomsum(1, 1, GaloisField::get(2)), InvalidInput);
}

TEST_CASE("binomsum matches the closed form for q <= 16, l <= q-2", "[identities]") {
    for (const char* q : {"3", "4", "5", "7", "8", "9", "11", "13", "16"}) {
        const auto& F = GaloisField::parse(q);
        const int Q = static_cast<int>(F.size());
        for (int j = 1; j <= Q - 1; ++j)
            for (int l = 1; l <= Q - 2; ++l) REQUIRE(binomsum(j, l, F) == binomsum_closed_form(j, l, F));
    }
}

TEST_CASE("binomsum closed form breaks at l = q-1", "[identities]") {
    // q=3, a=2: the sum has the single term 2/(1-2)^2 = 2, while C(1,2) = 0
    const auto& F3 = GaloisField::get(3);
    REQUIRE(binomsum(1, 2, F3) == 2);
    REQUIRE(binomsum_closed_form(1, 2, F3) == 0);
    // (1-a^n)^{q-1} = 1, so the sum is sum_n a^{jn} = -1 for j < q-1
    for (const char* q : {"4", "5", "7", "8", "9", "11", "13", "16"}) {
        const auto& F = GaloisField::parse(q);
        const int Q = static_cast<int>(F.size());
        for (int j = 1; j < Q - 1; ++j) REQUIRE(binomsum(j, Q - 1, F) == F.neg(1));
    }
}

TEST_CASE("double sum identity", "[identities]") {
    std::mt19937 rng(17);
    for (const char* q : {"4", "5", "7", "8", "9"}) {
        const auto& F = GaloisField::parse(q);
        const int Q = static_cast<int>(F.size());
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<RatFunc> X;
            for (std::uint32_t s = 0; s < F.size(); ++s) {
                std::vector<std::uint32_t> c(1 + rng() % 3);
                for (auto& v : c) v = rng() % F.size();
                X.emplace_back(Poly(F, c));
            }
            const std::uint32_t r = rng() % F.size();
            for (int l = 1; l <= Q - 2; ++l)
                for (int t = 1; t <= Q - 2; ++t) REQUIRE(intersum_check(l, t, X, r, F));
        }
    }
    const auto& F5 = GaloisField::get(5);
    std::vector<RatFunc> zero(5, RatFunc(Poly(F5)));
    REQUIRE(intersum_check(2, 1, zero, 0, F5));
    REQUIRE(intersum_sides(2, 1, std::vector<RatFunc>(5, RatFunc(Poly::from_int(F5, 1))), 3, F5).second.is_zero());
    REQUIRE_THROWS_AS(intersum_check(4, 1, zero, 0, F5), InvalidInput);
}

TEST_CASE("circulant eigenvectors", "[identities]") {
    for (const char* q : {"3", "5", "7", "9"}) REQUIRE(circulant_check(GaloisField::parse(q)));
}
