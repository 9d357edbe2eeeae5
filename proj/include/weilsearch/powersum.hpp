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

#ifndef WEILSEARCH_POWERSUM_HPP
#define WEILSEARCH_POWERSUM_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polynomial.hpp"
#include "power_sums.hpp"
#include "search_types.hpp"

namespace weilsearch {

/// Closed rational interval; `empty` when the constraints are contradictory.
struct RationalInterval {
    std::optional<mpq_class> lo;  ///< nullopt = -infinity
    std::optional<mpq_class> hi;  ///< nullopt = +infinity
    bool infeasible = false;

    bool empty() const { return infeasible || (lo && hi && *lo > *hi); }

    void at_least(const mpq_class& x) {
        if (!lo || x > *lo) lo = x;
    }
    void at_most(const mpq_class& x) {
        if (!hi || x < *hi) hi = x;
    }
    /// a x + c >= 0
    void require_nonnegative(const mpq_class& a, const mpq_class& c) {
        if (a == 0) {
            if (c < 0) infeasible = true;
        } else if (a > 0) {
            at_least(-c / a);
        } else {
            at_most(-c / a);
        }
    }
    /// a x + c <= 0
    void require_nonpositive(const mpq_class& a, const mpq_class& c) { require_nonnegative(-a, -c); }
    /// |a x + c| <= r
    void require_abs_at_most(const mpq_class& a, const mpq_class& c, const mpq_class& r) {
        require_nonpositive(a, c - r);
        require_nonnegative(a, c + r);
    }
};

/**
 * Shifted power sums of a root multiset: s'_i = sum (B + r)^i and
 * s''_i = sum (B - r)^i, both expressed through the plain power sums s_k.
 */
struct PowerSumState {
    PowerSums s;
    std::vector<mpq_class> shifted_plus;
    std::vector<mpq_class> shifted_minus;

    static PowerSumState from(const PowerSums& s, const mpq_class& B) {
        PowerSumState st{s, {}, {}};
        for (std::size_t i = 0; i < s.size(); ++i) {
            mpq_class plus = 0, minus = 0;
            for (std::size_t k = 0; k <= i; ++k) {
                mpq_class w = mpq_class(binomial(i, k)) * power(B, i - k) * s[k];
                plus += w;
                minus += (k % 2 == 0) ? w : mpq_class(-w);
            }
            st.shifted_plus.push_back(plus);
            st.shifted_minus.push_back(minus);
        }
        return st;
    }

    static mpq_class power(const mpq_class& b, std::size_t e) {
        mpq_class r = 1;
        for (std::size_t i = 0; i < e; ++i) r *= b;
        return r;
    }
};

namespace detail {

/// Tables shared by all nodes of one search: binom(i,k) B^(i-k) and Chebyshev coefficients t_(i,k).
class PowerSumTables {
   public:
    PowerSumTables(int n, const mpq_class& B) : B_(B) {
        const auto N = static_cast<std::size_t>(std::max(n, 0)) + 1;
        shift_.resize(N);
        cheb_.resize(N);
        for (std::size_t i = 0; i < N; ++i) {
            mpq_class bp = 1;
            shift_[i].resize(i + 1);
            for (std::size_t k = i + 1; k-- > 0;) {
                shift_[i][k] = mpq_class(binomial(i, k)) * bp;
                bp *= B;
            }
            RatPolynomial c = chebyshev_rescaled(static_cast<int>(i), B);
            cheb_[i].resize(i + 1);
            for (std::size_t k = 0; k <= i; ++k) cheb_[i][k] = c[k];
        }
    }

    const mpq_class& B() const { return B_; }
    std::size_t limit() const { return shift_.size(); }
    /// binom(i,k) B^(i-k)
    const mpq_class& shift(std::size_t i, std::size_t k) const { return shift_[i][k]; }
    /// Coefficient of z^k in C_i.
    const mpq_class& cheb(std::size_t i, std::size_t k) const { return cheb_[i][k]; }

   private:
    mpq_class B_;
    std::vector<std::vector<mpq_class>> shift_;
    std::vector<std::vector<mpq_class>> cheb_;
};

/// sum_(k<i) sign^k binom(i,k) B^(i-k) s_k, i.e. the shifted sum without its s_i term.
inline mpq_class shifted_partial(const PowerSumTables& t, const std::vector<mpq_class>& s, std::size_t i,
                                 bool alternate, std::size_t upto) {
    mpq_class acc = 0;
    for (std::size_t k = 0; k < upto; ++k) {
        if (alternate && k % 2 == 1)
            acc -= t.shift(i, k) * s[k];
        else
            acc += t.shift(i, k) * s[k];
    }
    return acc;
}

/// Bit flags selecting inequality families.
enum PowerSumFamily : unsigned {
    family_even_moment = 1u,  ///< s_J <= B^2 s_(J-2)
    family_chebyshev = 2u,    ///< Chebyshev sums bounded by n B and n B^3 / 2
    family_shift_plus = 4u,   ///< moments of B + r
    family_shift_minus = 8u,  ///< moments of B - r
    family_all = 15u,
};

/**
 * Interval for the unknown s_J given s_0..s_(J-1), intersecting the selected
 * families at index J. The root count n is s_0.
 */
inline RationalInterval power_sum_interval(const PowerSumTables& t, const std::vector<mpq_class>& s,
                                           std::size_t J, unsigned families = family_all) {
    if (J == 0 || s.size() < J) throw std::invalid_argument("power_sum_interval: need s_0..s_(J-1) with J >= 1");
    if (J >= t.limit()) throw std::invalid_argument("power_sum_interval: index beyond table");
    const mpq_class& B = t.B();
    const mpq_class& n = s[0];
    const mpq_class B2 = B * B;
    RationalInterval x;

    // (1) s_J - B^2 s_(J-2) <= 0 for J even
    if ((families & family_even_moment) && J % 2 == 0) x.require_nonpositive(1, -B2 * s[J - 2]);

    // (2) |sum_k t_(J,k) s_k| <= n B
    if (families & family_chebyshev) {
        mpq_class c = 0;
        for (std::size_t k = 0; k < J; ++k) c += t.cheb(J, k) * s[k];
        x.require_abs_at_most(t.cheb(J, J), c, n * B);
    }
    // |sum_k t_(J-2,k) (s_(k+2) - B^2/2 s_k)| <= n B^3 / 2
    if ((families & family_chebyshev) && J >= 2) {
        const std::size_t I = J - 2;
        mpq_class c = 0;
        for (std::size_t k = 0; k <= I; ++k) {
            mpq_class term = -B2 / 2 * s[k];
            if (k + 2 < J) term += s[k + 2];
            c += t.cheb(I, k) * term;
        }
        x.require_abs_at_most(t.cheb(I, I), c, n * B2 * B / 2);
    }

    // (3) and (4): s'_J s'_(J-2) - s'_(J-1)^2 >= 0 and s'_J - 2B s'_(J-1) <= 0,
    // and the same for s'' where s_J enters with sign (-1)^J
    for (bool alt : {false, true}) {
        if (!(families & (alt ? family_shift_minus : family_shift_plus))) continue;
        const mpq_class a = (alt && J % 2 == 1) ? mpq_class(-1) : mpq_class(1);
        const mpq_class rest = shifted_partial(t, s, J, alt, J);
        const mpq_class prev = shifted_partial(t, s, J - 1, alt, J);
        if (J >= 2) {
            const mpq_class prev2 = shifted_partial(t, s, J - 2, alt, J - 1);
            x.require_nonnegative(a * prev2, rest * prev2 - prev * prev);
        }
        x.require_nonpositive(a, rest - 2 * B * prev);
    }
    return x;
}

}  // namespace detail

/**
 * Interval of c_(n-J) values compatible with the four families, given the
 * affine dependence s_J = alpha + beta c_(n-J) with beta != 0.
 */
inline RationalInterval power_sum_bounds(const PowerSumState& state, std::size_t J, const mpq_class& alpha,
                                         const mpq_class& beta, const mpq_class& B,
                                         unsigned families = detail::family_all) {
    if (beta == 0) throw std::invalid_argument("power_sum_bounds: beta must be nonzero");
    detail::PowerSumTables t(static_cast<int>(J), B);
    RationalInterval x = detail::power_sum_interval(t, state.s.values, J, families);
    RationalInterval c;
    c.infeasible = x.empty();
    if (c.infeasible) return c;
    auto map = [&](const mpq_class& v) { return mpq_class((v - alpha) / beta); };
    if (beta > 0) {
        if (x.lo) c.lo = map(*x.lo);
        if (x.hi) c.hi = map(*x.hi);
    } else {
        if (x.hi) c.lo = map(*x.hi);
        if (x.lo) c.hi = map(*x.lo);
    }
    return c;
}

/// Child generation by bounding the next power sum.
class PowersumStrategy final : public ChildStrategy {
   public:
    explicit PowersumStrategy(SymmetricSearchProblem problem)
        : problem_(std::move(problem)), tables_(problem_.n, problem_.B) {}

    ChildRange children(const SearchNode& node) const override {
        const int idx = node.next_index(problem_);
        if (idx < 0) throw std::logic_error("children_powersum: node is at full depth");
        const auto J = static_cast<std::size_t>(problem_.n - idx);
        if (node.power_sums.size() != J) throw std::logic_error("children_powersum: power sums not prepared");

        const mpq_class cn(node.partial.leading());
        // alpha: s_J with c_(n-J) = 0
        std::vector<mpz_class> top = top_coeffs(node.partial, J);
        top[J] = 0;
        const mpq_class alpha = next_power_sum(top, node.power_sums);
        const mpq_class beta = mpq_class(-static_cast<long>(J)) / cn;

        RationalInterval x = detail::power_sum_interval(tables_, node.power_sums, J);
        if (x.empty()) return ChildRange::none();
        // beta < 0 because the leading coefficient is positive
        const mpq_class cl = (*x.hi - alpha) / beta;
        const mpq_class cu = (*x.lo - alpha) / beta;
        const auto ui = static_cast<std::size_t>(idx);
        const mpq_class b(problem_.base_coeffs[ui]);
        const mpq_class m(problem_.moduli[ui]);
        ChildRange out;
        out.lo = ceil_of((cl - b) / m);
        out.hi = floor_of((cu - b) / m);
        return out;
    }

    bool children_satisfy_condition_c() const override { return false; }
    const char* name() const override { return "powersum"; }

    void prepare_root(SearchNode& root) const override {
        const auto upto = static_cast<std::size_t>(problem_.k);
        std::vector<mpz_class> top = top_coeffs(root.partial, upto);
        root.power_sums.assign(1, mpq_class(problem_.n));
        while (root.power_sums.size() <= upto) root.power_sums.push_back(next_power_sum(top, root.power_sums));
    }

    void prepare_child(const SearchNode& parent, SearchNode& child) const override {
        const std::size_t J = parent.power_sums.size();
        child.power_sums = parent.power_sums;
        child.power_sums.push_back(next_power_sum(top_coeffs(child.partial, J), child.power_sums));
    }

   private:
    /// c_n, c_(n-1), ..., c_(n-J)
    std::vector<mpz_class> top_coeffs(const IntPolynomial& p, std::size_t J) const {
        std::vector<mpz_class> top(J + 1);
        for (std::size_t i = 0; i <= J; ++i) top[i] = p[static_cast<std::size_t>(problem_.n) - i];
        return top;
    }

    SymmetricSearchProblem problem_;
    detail::PowerSumTables tables_;
};

inline ChildRange children_powersum(const SearchNode& node, const SymmetricSearchProblem& problem) {
    return PowersumStrategy(problem).children(node);
}

}  // namespace weilsearch

#endif  // WEILSEARCH_POWERSUM_HPP
