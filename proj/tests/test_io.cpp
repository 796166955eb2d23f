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

#include "dhecke/io.hpp"

using namespace dhecke;

TEST_CASE("HeckeMatrix JSON round trip", "[io]") {
    for (const char* q : {"2", "3", "4", "9"})
        for (GroupKind g : {GroupKind::Gamma1T, GroupKind::GammaT}) {
            const auto& F = GaloisField::parse(q);
            auto H = hecke_matrix(SpaceSpec(F, 4, g), degree_one_primes(F).back());
            const Json j = to_json(H);
            const auto back = hecke_from_json(Json::parse(j.dump()));
            REQUIRE(back.spec == H.spec);
            REQUIRE(back.prime == H.prime);
            REQUIRE(back.M == H.M);
            REQUIRE(to_json(back).dump() == j.dump());
            REQUIRE(j["labels"].size() == H.M.rows());
        }
}

TEST_CASE("CocycleVector JSON round trip", "[io]") {
    const auto& F = GaloisField::get(5);
    SpaceSpec s(F, 3, GroupKind::GammaT);
    auto c = basis(s)[4];
    c.coords[0] = RatFunc(Poly::from_ints(F, {1, 2}), Poly::from_ints(F, {0, 1}));
    const Json j = to_json(c);
    REQUIRE(j["coords"][0] == "1,2/0,1");
    const auto back = cocycle_from_json(j);
    REQUIRE(back.coords == c.coords);
    REQUIRE(back.spec == c.spec);
}

TEST_CASE("EigenReport JSON round trip", "[io]") {
    const auto& F = GaloisField::get(3);
    auto R = analyze(hecke_matrix(SpaceSpec(F, 3, GroupKind::GammaT), HeckePrime::degree_one(F, 2)));
    const Json j = to_json(R, F);
    const auto back = eigen_from_json(Json::parse(j.dump()));
    REQUIRE(same_report(back, R));
    REQUIRE(to_json(back, F).dump() == j.dump());
    const auto& F2 = GaloisField::get(2);
    auto R2 = analyze(hecke_matrix(SpaceSpec(F2, 5, GroupKind::Gamma1T), HeckePrime::degree_one(F2, 1)));
    REQUIRE(same_report(eigen_from_json(to_json(R2, F2)), R2));
    REQUIRE_THROWS_AS(eigen_from_json(Json::object()), InvalidInput);
}

TEST_CASE("text and csv rendering", "[io]") {
    const auto& F = GaloisField::get(2);
    auto H = hecke_matrix(SpaceSpec(F, 5, GroupKind::Gamma1T), HeckePrime::degree_one(F, 1));
    REQUIRE(render_grid(H.M) ==
            "1    0  0    0\n"
            "T^2  1  T^2  T^3\n"
            "T    T  1    T^3\n"
            "0    0  0    1\n");
    REQUIRE(render_csv(H.M) == "1,0,0,0\nT^2,1,T^2,T^3\nT,T,1,T^3\n0,0,0,1\n");
    auto R = analyze(H);
    const std::string s = render_summary(R);
    REQUIRE(s.find("1 : 2 / 2") != std::string::npos);
    REQUIRE(s.find("not diagonalizable") != std::string::npos);
    REQUIRE(upoly_text(R.minpoly) == "X^3 + X^2 + (1+T^3)X + 1+T^3");
}

TEST_CASE("rendering is deterministic", "[io]") {
    const auto& F = GaloisField::parse("4");
    auto H = hecke_matrix(SpaceSpec(F, 4, GroupKind::GammaT), HeckePrime::degree_one(F, 1));
    REQUIRE(to_json(H).dump() == to_json(hecke_matrix(H.spec, H.prime)).dump());
    REQUIRE(render_grid(H.M) == render_grid(hecke_matrix(H.spec, H.prime).M));
}
