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

#include <set>

#include "dhecke/field.hpp"

using namespace dhecke;

namespace {
const std::vector<std::uint32_t> kPrimePowers{2, 3, 4, 5, 7, 8, 9, 11, 13, 16};
}

TEST_CASE("field axioms hold exhaustively for q <= 16", "[field]") {
    for (auto q : kPrimePowers) {
        const auto& F = GaloisField::parse(std::to_string(q));
        REQUIRE(F.size() == q);
        for (std::uint32_t a = 0; a < q; ++a) {
            REQUIRE(F.add(a, 0) == a);
            REQUIRE(F.mul(a, 1) == a);
            REQUIRE(F.add(a, F.neg(a)) == 0);
            if (a) REQUIRE(F.mul(a, F.inv(a)) == 1);
            for (std::uint32_t b = 0; b < q; ++b) {
                REQUIRE(F.add(a, b) == F.add(b, a));
                REQUIRE(F.mul(a, b) == F.mul(b, a));
                for (std::uint32_t c = 0; c < q; ++c) {
                    REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                    REQUIRE(F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c));
                    REQUIRE(F.add(a, F.add(b, c)) == F.add(F.add(a, b), c));
                }
            }
        }
        std::set<std::uint32_t> seen;
        for (auto x : F.elements()) seen.insert(x);
        REQUIRE(seen.size() == q);
        REQUIRE(F.order(F.generator()) == q - 1);
    }
}

TEST_CASE("spec examples for field arithmetic", "[field]") {
    REQUIRE(GaloisField::get(2).inv(1) == 1);
    const auto& F5 = GaloisField::get(5);
    REQUIRE(F5.inv(2) == 3);
    // x^2+x+1 over F_2
    const auto& F4 = GaloisField::parse("2^2/1,1,1");
    const auto g = F4.generator();
    REQUIRE(F4.pow(g, 3) == 1);
    REQUIRE(g != 1);
    REQUIRE_THROWS_AS(F5.inv(0), DivisionByZero);
}

TEST_CASE("field spec parsing and validation", "[field]") {
    auto s = FieldSpec::parse("3^2/2,2,1");
    REQUIRE(s.p == 3);
    REQUIRE(s.e == 2);
    REQUIRE(s.modulus == std::vector<std::uint32_t>{2, 2, 1});
    REQUIRE(FieldSpec::parse("9").e == 2);
    REQUIRE(FieldSpec::parse("7").p == 7);
    REQUIRE_THROWS_AS(FieldSpec::parse("6"), InvalidInput);
    // x^2+1 is reducible over F_2
    REQUIRE_THROWS_AS(GaloisField::parse("2^2/1,0,1"), InvalidInput);
    // x^2+1 is irreducible over F_3
    REQUIRE_NOTHROW(GaloisField::parse("3^2/1,0,1"));
    const auto& F9 = GaloisField::parse("3^2/1,0,1");
    REQUIRE(F9.order(F9.generator()) == 8);
}

TEST_CASE("element text round trip", "[field]") {
    const auto& F = GaloisField::parse("8");
    for (auto x : F.elements()) REQUIRE(F.parse_element(F.to_string(x)) == x);
}

TEST_CASE("binomials mod p", "[field]") {
    REQUIRE(binom_mod_p(5, 2, 2) == 0);
    REQUIRE(binom_mod_p(6, 3, 3) == 2);
    REQUIRE(binom_mod_p(3, 5, 7) == 0);
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
        for (std::uint64_t n = 0; n <= 64; ++n) {
            REQUIRE(binom_mod_p(static_cast<long long>(n), 0, p) == 1);
            for (std::uint64_t k = 0; k <= n + 1; ++k)
                REQUIRE(binom_mod_p_lucas(n, k, p) == binom_mod_p_exact(n, k, p));
        }
}

TEST_CASE("embeddings respect arithmetic", "[field]") {
    const auto& F4 = GaloisField::get(2, 2);
    const auto& F16 = GaloisField::get(2, 4);
    const auto& emb = FieldEmbedding::get(F4, F16);
    for (auto a : F4.elements())
        for (auto b : F4.elements()) {
            REQUIRE(emb(F4.add(a, b)) == F16.add(emb(a), emb(b)));
            REQUIRE(emb(F4.mul(a, b)) == F16.mul(emb(a), emb(b)));
            REQUIRE(emb.preimage(emb(a)) == a);
        }
    REQUIRE_THROWS_AS(FieldEmbedding::get(GaloisField::get(2, 2), GaloisField::get(2, 3)), InvalidInput);
}
