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

// Gamma(T) eigenvalue table for weights 3..6 over a few small fields, with the
// double-cusp restriction next to the full space.

#include <iomanip>
#include <iostream>

#include "dhecke/dhecke.hpp"

int main(int argc, char** argv) {
    using namespace dhecke;
    const std::vector<std::string> fields = argc > 1 ? std::vector<std::string>(argv + 1, argv + argc)
                                                     : std::vector<std::string>{"3", "4", "5", "7"};
    for (const auto& q : fields) {
        const auto& F = GaloisField::parse(q);
        for (int k = 3; k <= 6; ++k) {
            const auto H = hecke_matrix(SpaceSpec(F, k, GroupKind::GammaT), HeckePrime::degree_one(F, 1));
            const auto R = analyze(H);
            const auto D = analyze_matrix(restrict_double_cusp(H), default_degree_bound(H), distinct_lambdas(k, H.prime));
            std::cout << "q=" << std::setw(2) << q << " k=" << k << " dim " << std::setw(2) << R.size << "  ";
            for (const auto& e : R.rational) std::cout << e.value.to_string() << " [" << e.algebraic << "/" << e.geometric << "]  ";
            std::cout << (R.diagonalizable ? "diag" : "not diag") << "; double cusp " << (D.diagonalizable ? "diag" : "not diag") << "\n";
        }
    }
}
