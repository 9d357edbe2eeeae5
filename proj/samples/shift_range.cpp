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

// Admissible constant shifts c for which R + c has all roots in [-B, B].

#include <iostream>

#include "weilsearch/weilsearch.hpp"

int main() {
    using namespace weilsearch;
    const mpq_class B = 2;
    const RatPolynomial cases[] = {
        {mpq_class(-2), mpq_class(0), mpq_class(1)},                // z^2 - 2
        {mpq_class(0), mpq_class(-3), mpq_class(0), mpq_class(1)},  // z^3 - 3z
        {mpq_class(-6), mpq_class(0), mpq_class(1)},                // z^2 - 6
        {mpq_class(0), mpq_class(0), mpq_class(0), mpq_class(1)},   // z^3, degenerate
    };
    for (const auto& R : cases) {
        std::cout << "R = " << R << ": ";
        std::optional<ShiftRange> r;
        for (int p : PrecisionPolicy{}.schedule())
            if ((r = solve_shift_range(R, B, p))) break;
        if (!r)
            std::cout << "aborted\n";
        else if (r->empty())
            std::cout << "no shift\n";
        else
            std::cout << "c in [" << r->lo << ", " << r->hi << "]\n";
    }
}
