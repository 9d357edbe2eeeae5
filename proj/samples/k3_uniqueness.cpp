/*
   Copyright 2026 The weilsearch authors

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

// Congruence grid for a degree-21 K3 factor over F_3: which "mod 3^i T^j"
// conditions force the polynomial.

#include <iomanip>
#include <iostream>

#include "weilsearch/weilsearch.hpp"

int main(int argc, char** argv) {
    using namespace weilsearch;
    const StrategyKind strategy = argc > 1 ? parse_strategy(argv[1]) : StrategyKind::powersum;
    ProblemSpec spec;
    spec.form = ProblemForm::weil;
    spec.q = 1;
    spec.degree = 21;
    spec.sign = 1;
    for (long c : {3, 5, 6, 7, 5, 4, 2, -1, -3, -5, -5, -5, -5, -3, -1, 2, 4, 5, 7, 6, 5, 3}) spec.base_coeffs.emplace_back(c);

    std::cout << "cell        solutions  terminal nodes  seconds\n";
    for (int i = 2; i <= 5; ++i) {
        for (int j = 1; j <= 5; ++j) {
            spec.shorthand = CongruenceShorthand{3, i, j};
            SearchOptions opts;
            opts.strategy = strategy;
            SolveResult r = solve(prepare(spec), opts);
            std::cout << "3^" << i << " T^" << j << "    " << std::setw(9) << r.solutions.size() << std::setw(16)
                      << r.report.terminal_nodes << "  " << std::fixed << std::setprecision(2)
                      << r.report.wall_time_seconds << "\n";
        }
    }
}
