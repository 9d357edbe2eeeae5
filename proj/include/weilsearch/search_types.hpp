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

#ifndef WEILSEARCH_SEARCH_TYPES_HPP
#define WEILSEARCH_SEARCH_TYPES_HPP

#include <sstream>
#include <string>
#include <vector>

#include "polynomial.hpp"
#include "sturm.hpp"
#include "weil.hpp"

namespace weilsearch {

/**
 * A partial assignment (d_(n-k-1), ..., d_(n-k-depth)) of the free
 * coefficients. `partial` is the full degree-n polynomial with the chosen
 * values filled in and base values b_i everywhere else.
 */
struct SearchNode {
    int depth = 0;
    std::vector<mpz_class> chosen;
    IntPolynomial partial;
    /// s_0..s_(k+depth) of `partial`'s known top coefficients; empty unless the strategy caches them.
    std::vector<mpq_class> power_sums;

    /// Index of the coefficient the children of this node assign.
    int next_index(const SymmetricSearchProblem& p) const { return p.n - p.k - depth - 1; }

    std::string describe() const {
        std::ostringstream os;
        os << "depth=" << depth << " chosen=(";
        for (std::size_t i = 0; i < chosen.size(); ++i) os << (i ? "," : "") << chosen[i];
        os << ")";
        return os.str();
    }
};

/// Integer interval [lo, hi] of admissible lattice values d for the next coefficient.
struct ChildRange {
    mpz_class lo = 0;
    mpz_class hi = -1;
    /// Root-finding precision that certified this range (0 when not applicable).
    int precision_used = 0;

    bool empty() const { return lo > hi; }
    mpz_class size() const { return empty() ? mpz_class(0) : mpz_class(hi - lo + 1); }
    static ChildRange none() { return {}; }
};

/**
 * Values of the range ordered by distance from floor((lo+hi)/2), the smaller
 * value first on ties: [5, 9] gives 7, 6, 8, 5, 9.
 */
inline std::vector<mpz_class> order_inside_out(const ChildRange& r) {
    std::vector<mpz_class> out;
    if (r.empty()) return out;
    mpz_class center;
    mpz_class sum = r.lo + r.hi;
    mpz_fdiv_q_2exp(center.get_mpz_t(), sum.get_mpz_t(), 1);
    out.push_back(center);
    for (mpz_class step = 1;; ++step) {
        mpz_class below = center - step;
        mpz_class above = center + step;
        bool any = false;
        if (below >= r.lo) {
            out.push_back(below);
            any = true;
        }
        if (above <= r.hi) {
            out.push_back(above);
            any = true;
        }
        if (!any) break;
    }
    return out;
}

/// The (n-k-depth)-th derivative of the node's partial polynomial has all roots in [-B, B].
inline bool check_condition_c(const SearchNode& node, const SymmetricSearchProblem& problem) {
    const int order = problem.n - problem.k - node.depth;
    IntPolynomial der = nth_derivative(node.partial, order);
    if (der.is_zero()) return true;
    return all_roots_in(der, problem.interval());
}

/**
 * Child generation for the tree search. Implementations must be immutable
 * after construction so one instance can serve concurrent workers.
 */
class ChildStrategy {
   public:
    virtual ~ChildStrategy() = default;

    /// Admissible d-values for the node's next coefficient.
    virtual ChildRange children(const SearchNode& node) const = 0;

    /// Whether generated children are guaranteed to satisfy condition (c).
    virtual bool children_satisfy_condition_c() const = 0;

    /// Fills strategy caches on the root node.
    virtual void prepare_root(SearchNode&) const {}

    /// Fills strategy caches on a freshly built child.
    virtual void prepare_child(const SearchNode& /*parent*/, SearchNode& /*child*/) const {}

    virtual const char* name() const = 0;
};

}  // namespace weilsearch

#endif  // WEILSEARCH_SEARCH_TYPES_HPP
