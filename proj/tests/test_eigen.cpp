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

#include "dhecke/eigen.hpp"

using namespace dhecke;

namespace {
RatFunc P(const GaloisField& F, std::initializer_list<long long> c) { return RatFunc(Poly::from_ints(F, c)); }
UPoly<RatFunc> X(const GaloisField& F, std::initializer_list<std::initializer_list<long long>> cs) {
    std::vector<RatFunc> v;
    for (auto c : cs) v.push_back(P(F, c));
    return UPoly<RatFunc>(v, P(F, {0}));
}

void check_invariants(const EigenReport& R) {
    int total = 0;
    bool all_equal = true;
    for (const auto& e : R.rational) {
        REQUIRE(e.geometric <= e.algebraic);
        REQUIRE(e.geometric >= 1);
        all_equal = all_equal && e.geometric == e.algebraic;
        total += e.algebraic;
    }
    bool irr_sep = true;
    for (const auto& f : R.irrational) {
        total += f.charpoly_degree;
        irr_sep = irr_sep && f.separable;
    }
    REQUIRE(static_cast<std::size_t>(total) == R.size);
    REQUIRE(R.diagonalizable == (all_equal && irr_sep));
}
}  // namespace

TEST_CASE("q=2 k=5 Gamma_1 matrix is not diagonalizable", "[eigen]") {
    const auto& F = GaloisField::get(2);
    auto H = hecke_matrix(SpaceSpec(F, 5, GroupKind::Gamma1T), HeckePrime::degree_one(F, 1));
    auto R = analyze(H);
    // (X-1)^2 (X^2+1+T^3) and (X-1)(X^2+1+T^3)
    const auto quad = X(F, {{1, 0, 0, 1}, {0}, {1}});
    const auto lin = X(F, {{1}, {1}});
    REQUIRE(R.charpoly == lin * lin * quad);
    REQUIRE(R.minpoly == lin * quad);
    REQUIRE(R.rational.size() == 1);
    REQUIRE(R.rational[0].value.is_one());
    REQUIRE(R.rational[0].algebraic == 2);
    REQUIRE(R.rational[0].geometric == 2);
    REQUIRE_FALSE(R.diagonalizable);
    REQUIRE(R.certificate_gcd.degree() > 0);
    REQUIRE(R.irrational.size() == 1);
    REQUIRE(R.irrational[0].factor == quad);
    REQUIRE_FALSE(R.irrational[0].separable);
    check_invariants(R);
}

TEST_CASE("q=3 k=7 Gamma_1 blocks", "[eigen]") {
    const auto& F = GaloisField::get(3);
    auto H = hecke_matrix(SpaceSpec(F, 7, GroupKind::Gamma1T), HeckePrime::degree_one(F, 1));
    for (const auto& blk : block_decompose_gamma1(H)) {
        auto R = analyze_matrix(blk.M, 3);
        REQUIRE(R.rational.size() == 1);
        REQUIRE(R.rational[0].value.is_one());
        REQUIRE(R.irrational.size() == 1);
        REQUIRE(R.irrational[0].factor.degree() == 2);
        REQUIRE(R.irrational[0].separable);
        REQUIRE(R.diagonalizable);
        check_invariants(R);
    }
    REQUIRE(diagonalizable(H.M).diagonalizable);
}

TEST_CASE("Gamma(T) eigenspaces", "[eigen]") {
    SECTION("q=3 k=3") {
        const auto& F = GaloisField::get(3);
        auto R = analyze(hecke_matrix(SpaceSpec(F, 3, GroupKind::GammaT), HeckePrime::degree_one(F, 1)));
        REQUIRE(R.size == 6);
        REQUIRE(R.rational.size() == 1);
        REQUIRE(R.rational[0].value.is_one());
        REQUIRE(R.rational[0].geometric == 4);
        REQUIRE_FALSE(R.diagonalizable);
        REQUIRE(R.eigenone_holds == true);
        check_invariants(R);
    }
    SECTION("q=5 k=4") {
        const auto& F = GaloisField::get(5);
        auto pr = HeckePrime::degree_one(F, 1);
        auto R = analyze(hecke_matrix(SpaceSpec(F, 4, GroupKind::GammaT), pr));
        REQUIRE(R.rational.size() == 2);
        const auto* one = find_eigen(R, Poly::from_int(F, 1));
        const auto* two = find_eigen(R, Poly::from_int(F, 2) - pr.P);
        REQUIRE(one);
        REQUIRE(two);
        REQUIRE(one->geometric == 7);
        REQUIRE(two->geometric == 5);
        REQUIRE_FALSE(R.diagonalizable);
        REQUIRE(R.eigenone_holds == true);
        check_invariants(R);
    }
    SECTION("q=4 k=5") {
        const auto& F = GaloisField::parse("4");
        auto R = analyze(hecke_matrix(SpaceSpec(F, 5, GroupKind::GammaT), HeckePrime::degree_one(F, 1)));
        REQUIRE(R.rational.size() == 1);
        REQUIRE(R.rational[0].value.is_one());
        REQUIRE(total_geometric(R) < 16);
        REQUIRE_FALSE(R.diagonalizable);
        check_invariants(R);
    }
}

TEST_CASE("search without candidates finds the same eigenvalues", "[eigen]") {
    const auto& F = GaloisField::get(5);
    auto pr = HeckePrime::degree_one(F, 3);
    auto H = hecke_matrix(SpaceSpec(F, 4, GroupKind::GammaT), pr);
    auto found = rational_eigenvalues(H.M, 1);
    std::vector<Poly> expect{Poly::from_int(F, 1), Poly::from_int(F, 2) - pr.P};
    std::sort(expect.begin(), expect.end());
    REQUIRE(found == expect);
    // specialization soundness: lambda(t) is a root of chi(t) at every point used
    SpecializationInfo info;
    rational_eigenvalues(H.M, 1, {}, 7, &info);
    REQUIRE(info.points.size() >= 2);
}

TEST_CASE("eigenspace and certificate on small matrices", "[eigen]") {
    const auto& F = GaloisField::get(3);
    const RatFunc z = P(F, {0}), o = P(F, {1});
    auto J = MatrixQ::from_rows({{o, o}, {z, o}}, z);
    REQUIRE(eigenspace(J, Poly::from_int(F, 1)).size() == 1);
    REQUIRE(eigenspace(J, Poly::from_int(F, 2)).empty());
    REQUIRE_FALSE(diagonalizable(J).diagonalizable);
    auto D = MatrixQ::from_rows({{o, z}, {z, P(F, {0, 1})}}, z);
    REQUIRE(diagonalizable(D).diagonalizable);
    auto v = eigenspace(D, Poly::from_ints(F, {0, 1}));
    REQUIRE(v.size() == 1);
    REQUIRE(v[0][1].is_one());
    REQUIRE(rational_eigenvalues(D, 1) == std::vector<Poly>{Poly::from_int(F, 1), Poly::from_ints(F, {0, 1})});
    REQUIRE(rational_eigenvalues(D, 0) == std::vector<Poly>{Poly::from_int(F, 1)});
    REQUIRE_THROWS_AS(rational_eigenvalues(MatrixQ(1, 2, z), 1), ShapeError);
}
