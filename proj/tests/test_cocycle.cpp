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

#include "dhecke/cocycle.hpp"

using namespace dhecke;

TEST_CASE("dimension formulas", "[cocycle]") {
    const auto& F3 = GaloisField::get(3);
    REQUIRE(dim_space(SpaceSpec(F3, 5, GroupKind::Gamma1T)) == 4);
    REQUIRE(dim_space(SpaceSpec(F3, 3, GroupKind::GammaT)) == 6);
    REQUIRE(dim_space(SpaceSpec(F3, 2, GroupKind::GammaT, Layer::DoubleCuspidal)) == 0);
    REQUIRE(dim_space(SpaceSpec(F3, 2, GroupKind::Gamma1T, Layer::DoubleCuspidal)) == 0);
    REQUIRE(dim_space(SpaceSpec(F3, 4, GroupKind::GammaT, Layer::DoubleCuspidal)) == 5);
    for (int k = 2; k <= 6; ++k) REQUIRE(dim_space(SpaceSpec(F3, k, GroupKind::Gamma1T)) == k - 1);
    REQUIRE_THROWS_AS(SpaceSpec(F3, 1, GroupKind::Gamma1T), InvalidInput);
}

TEST_CASE("basis sizes and double-cusp constraint ranks", "[cocycle]") {
    for (const char* q : {"2", "3", "4", "5", "7", "8", "9"}) {
        const auto& F = GaloisField::parse(q);
        for (int k = 2; k <= 9; ++k)
            for (auto g : {GroupKind::Gamma1T, GroupKind::GammaT}) {
                SpaceSpec s(F, k, g);
                REQUIRE(static_cast<int>(basis(s).size()) == dim_space(s));
                if (g == GroupKind::GammaT && F.size() > 5 && k > 5) continue;  // keep runtime low
                const auto C = double_cusp_constraints(s);
                const std::size_t expect_rank = (g == GroupKind::Gamma1T) ? (k == 2 ? 1 : 2) : (k == 2 ? F.size() : F.size() + 1);
                REQUIRE(rank(C) == expect_rank);
                REQUIRE(static_cast<int>(double_cusp_basis(s).size()) == dim_space(s.with_layer(Layer::DoubleCuspidal)));
            }
    }
}

TEST_CASE("small examples", "[cocycle]") {
    const auto& F2 = GaloisField::get(2);
    auto b = basis(SpaceSpec(F2, 2, GroupKind::GammaT));
    REQUIRE(b.size() == 2);
    const auto& F3 = GaloisField::get(3);
    auto b1 = basis(SpaceSpec(F3, 3, GroupKind::Gamma1T));
    REQUIRE(b1.size() == 2);
    REQUIRE(b1[0].coords[0].is_one());
    REQUIRE(b1[0].coords[1].is_zero());
    // k=5: c_1, c_2 span the double-cusp layer
    auto dc = double_cusp_basis(SpaceSpec(F2, 5, GroupKind::Gamma1T));
    REQUIRE(dc.size() == 2);
    REQUIRE(dc[0][1].is_one());
    REQUIRE(dc[1][2].is_one());
    REQUIRE(dc[0][0].is_zero());
    REQUIRE(dc[1][3].is_zero());
    REQUIRE(double_cusp_constraints(SpaceSpec(F2, 2, GroupKind::Gamma1T)).rows() == 1);
}

TEST_CASE("vectors of different spaces do not mix", "[cocycle]") {
    const auto& F3 = GaloisField::get(3);
    auto a = basis(SpaceSpec(F3, 3, GroupKind::Gamma1T))[0];
    auto b = basis(SpaceSpec(F3, 4, GroupKind::Gamma1T))[0];
    REQUIRE_THROWS_AS(a + b, GroupMismatch);
}

TEST_CASE("shifted basis change", "[cocycle]") {
    const auto& F5 = GaloisField::get(5);
    REQUIRE(basis_change_xy_to_shifted(0, 6, F5) == MatrixQ::identity(5, RatFunc(Poly(F5))));
    // k=3, r=1: X = (X-Y) + Y
    auto B = basis_change_xy_to_shifted(1, 3, F5);
    REQUIRE(B(0, 1).is_one());
    REQUIRE(B(1, 1).is_one());
    for (std::uint32_t r = 0; r < 5; ++r) {
        auto M = basis_change_xy_to_shifted(r, 6, F5);
        auto I = MatrixQ::identity(5, RatFunc(Poly(F5)));
        REQUIRE(M * inverse(M) == I);
        // functional coordinates transform by the inverse transpose
        REQUIRE(functional_xy_to_shifted(r, 6, F5) == inverse(M).transpose());
    }
}
