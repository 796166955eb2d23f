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

// Gamma_1(T), q=3, k=7, P=1+T: the two residue blocks and their eigen reports.

#include <iostream>

#include "dhecke/dhecke.hpp"

int main() {
    using namespace dhecke;
    const auto& F = GaloisField::get(3);
    const auto H = hecke_matrix(SpaceSpec(F, 7, GroupKind::Gamma1T), HeckePrime::degree_one(F, 1));
    for (const auto& b : block_decompose_gamma1(H)) {
        std::cout << "[T_P]_" << b.residue << "\n" << render_grid(b.M);
        std::cout << render_summary(analyze_matrix(b.M, default_degree_bound(H))) << "\n";
    }
    std::cout << "whole operator " << (diagonalizable(H.M).diagonalizable ? "is" : "is not") << " diagonalizable\n";
}
