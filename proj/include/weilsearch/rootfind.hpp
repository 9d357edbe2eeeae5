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

#ifndef WEILSEARCH_ROOTFIND_HPP
#define WEILSEARCH_ROOTFIND_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numeric_roots.hpp"
#include "polynomial.hpp"
#include "search_types.hpp"
#include "sturm.hpp"

namespace weilsearch {

/// Dyadic bracket [r, s] around one critical point of R, or a degenerate endpoint bracket.
struct Bracket {
    enum class Role { local_max, local_min, endpoint };
    mpq_class r;
    mpq_class s;
    Role role = Role::endpoint;
};

/// Integers c with R + c having all roots in [-B, B]: a possibly empty interval [lo, hi].
struct ShiftRange {
    mpz_class lo = 0;
    mpz_class hi = -1;

    bool empty() const { return lo > hi; }
    static ShiftRange none() { return {}; }
    static ShiftRange single(const mpz_class& c) { return {c, c}; }
    friend bool operator==(const ShiftRange& a, const ShiftRange& b) {
        if (a.empty() || b.empty()) return a.empty() == b.empty();
        return a.lo == b.lo && a.hi == b.hi;
    }
};

/// Precision schedule for the root-finding strategy: initial, doubling on each retry.
struct PrecisionPolicy {
    int initial = 32;
    int max_retries = 3;

    std::vector<int> schedule() const {
        std::vector<int> out;
        int p = initial;
        for (int i = 0; i <= max_retries; ++i, p *= 2) out.push_back(p);
        return out;
    }
};

namespace detail {

inline ScaledPolynomial negated(const ScaledPolynomial& f) { return {-f.numerator, f.denominator}; }

/// num - v*den as an integer polynomial (the numerator of R - v).
inline IntPolynomial shifted_numerator(const ScaledPolynomial& f, const mpz_class& v) {
    std::vector<mpz_class> c = f.numerator.coeffs();
    if (c.empty()) c.resize(1);
    c[0] -= v * f.denominator;
    return IntPolynomial(std::move(c));
}

inline mpz_class bracket_floor_max(const ScaledPolynomial& f, const mpq_class& r, const mpq_class& s,
                                   const std::optional<mpz_class>& t0) {
    mpq_class fr = evaluate(f.numerator, r) / mpq_class(f.denominator);
    mpz_class t = floor_of(fr);
    if (t0 && t >= *t0) return *t0;
    mpq_class slope = evaluate(derivative(f.numerator), r) / mpq_class(f.denominator);
    mpz_class u = floor_of(fr + (s - r) * slope);
    const ClosedInterval bracket(r, s);
    while (t < u) {
        mpz_class v;
        mpz_class sum = t + u;
        mpz_cdiv_q_2exp(v.get_mpz_t(), sum.get_mpz_t(), 1);
        if (sturm_count(shifted_numerator(f, v), bracket) > 0)
            t = v;
        else
            u = v - 1;
    }
    return t;
}

inline std::optional<ShiftRange> prescreen(const ScaledPolynomial& f, const mpq_class& B) {
    const IntPolynomial& R = f.numerator;
    IntPolynomial d1 = derivative(R);
    IntPolynomial d2 = derivative(d1);
    // z^2 - B^2 scaled to integer coefficients
    const mpz_class& bn = B.get_num();
    const mpz_class& bd = B.get_den();
    IntPolynomial edge{mpz_class(-bn * bn), mpz_class(0), mpz_class(bd * bd)};
    IntPolynomial T = gcd(d1, edge * d2);
    if (T.degree() <= 0) return std::nullopt;
    RatPolynomial g = squarefree_part(to_rational(T));
    RatPolynomial Rq = to_rational(R) * mpq_class(1, f.denominator);
    auto [quot, rho] = divide(Rq, g);
    if (rho.degree() > 0) return ShiftRange::none();
    mpq_class c = rho.is_zero() ? mpq_class(0) : mpq_class(-rho.coeffs()[0]);
    if (c.get_den() != 1) return ShiftRange::none();
    IntPolynomial shifted = shifted_numerator(f, -c.get_num());
    if (shifted.is_zero() || !all_roots_in(shifted, ClosedInterval::symmetric(B))) return ShiftRange::none();
    return ShiftRange::single(c.get_num());
}

inline std::optional<ShiftRange> solve_shift_range(const ScaledPolynomial& f, const mpq_class& B, int p,
                                                   const RootApproximator& approx) {
    const IntPolynomial& R = f.numerator;
    const int d = R.degree();
    if (d < 1) throw std::invalid_argument("solve_shift_range: R must be nonconstant");
    if (R.leading() < 0) throw std::invalid_argument("solve_shift_range: R must have positive leading coefficient");
    IntPolynomial d1 = derivative(R);
    IntPolynomial d2 = derivative(d1);

    std::vector<mpq_class> r(static_cast<std::size_t>(d) + 1), s(static_cast<std::size_t>(d) + 1);
    r[0] = s[0] = -B;
    r[static_cast<std::size_t>(d)] = s[static_cast<std::size_t>(d)] = B;
    if (d >= 2) {
        std::vector<mpq_class> xs = approx(primitive_part(d1), p);
        if (xs.size() != static_cast<std::size_t>(d - 1)) return prescreen(f, B);
        const auto scale = static_cast<unsigned long>(p - 1);
        mpq_class width(1);
        mpq_div_2exp(width.get_mpq_t(), width.get_mpq_t(), static_cast<unsigned long>(p - 3));
        for (int i = 1; i < d; ++i) {
            // r_i = floor(x 2^(p-1) - 1) 2^(-p+1), s_i = r_i + 2^(-p+3)
            mpq_class t = xs[static_cast<std::size_t>(i - 1)];
            mpq_mul_2exp(t.get_mpq_t(), t.get_mpq_t(), scale);
            mpq_class ri(floor_of(t - 1));
            mpq_div_2exp(ri.get_mpq_t(), ri.get_mpq_t(), scale);
            r[static_cast<std::size_t>(i)] = ri;
            s[static_cast<std::size_t>(i)] = ri + width;
        }
        for (int i = 1; i < d; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            if (s[ui] >= r[ui + 1]) return prescreen(f, B);
            int curv = sign_at(d2, r[ui]);
            if ((d - i) % 2 != 0) curv = -curv;
            if (curv > 0) return prescreen(f, B);
            if (sign_at(d1, r[ui]) * sign_at(d1, s[ui]) >= 0) return prescreen(f, B);
        }
    }

    std::optional<mpz_class> lo, hi;
    for (int i = d; i >= 0; --i) {
        const auto ui = static_cast<std::size_t>(i);
        const bool max_role = (d - i) % 2 == 0;
        if (r[ui] == s[ui]) {
            mpq_class t = evaluate(R, r[ui]) / mpq_class(f.denominator);
            if (max_role) {
                mpz_class cand = -floor_of(t);
                if (!lo || cand > *lo) lo = cand;
            } else {
                mpz_class cand = -ceil_of(t);
                if (!hi || cand < *hi) hi = cand;
            }
        } else if (max_role) {
            std::optional<mpz_class> t0;
            if (lo) t0 = mpz_class(-*lo);
            mpz_class t = bracket_floor_max(f, r[ui], s[ui], t0);
            mpz_class cand = -t;
            if (!lo || cand > *lo) lo = cand;
        } else {
            mpz_class t = bracket_floor_max(negated(f), r[ui], s[ui], hi);
            if (!hi || t < *hi) hi = t;
        }
        if (lo && hi && *lo > *hi) return ShiftRange::none();
    }
    return ShiftRange{*lo, *hi};
}

}  // namespace detail

/**
 * floor(R(x)) for x the unique local maximum of R in [r, s], unless
 * floor(R(r)) >= t0 already, in which case t0 is returned.
 */
inline mpz_class bracket_floor_max(const RatPolynomial& R, const mpq_class& r, const mpq_class& s,
                                   const std::optional<mpz_class>& t0 = std::nullopt) {
    return detail::bracket_floor_max(clear_denominators(R), r, s, t0);
}

/**
 * Exact treatment of the degenerate configurations (R' with a repeated root
 * or a root at +-B). nullopt means abort: no such configuration is present.
 */
inline std::optional<ShiftRange> prescreen(const RatPolynomial& R, const mpq_class& B) {
    return detail::prescreen(clear_denominators(R), B);
}

/**
 * All integers c such that R + c has every root in [-B, B], given that R'
 * does. Critical points are located numerically at precision p and then
 * certified exactly; nullopt signals that p was insufficient.
 */
inline std::optional<ShiftRange> solve_shift_range(const RatPolynomial& R, const mpq_class& B, int p,
                                                   const RootApproximator& approx = approximate_roots) {
    if (p < 4) throw std::invalid_argument("solve_shift_range: precision must be at least 4");
    return detail::solve_shift_range(clear_denominators(R), B, p, approx);
}

/// Child generation by solving the shift problem on the appropriate derivative.
class RootfindStrategy final : public ChildStrategy {
   public:
    RootfindStrategy(SymmetricSearchProblem problem, PrecisionPolicy policy = {},
                     RootApproximator approx = approximate_roots)
        : problem_(std::move(problem)), policy_(policy), approx_(std::move(approx)) {}

    ChildRange children(const SearchNode& node) const override {
        const int idx = node.next_index(problem_);
        if (idx < 0) throw std::logic_error("children_rootfind: node is at full depth");
        ScaledPolynomial f{nth_derivative(node.partial, idx),
                           factorial(static_cast<unsigned long>(idx)) * problem_.moduli[static_cast<std::size_t>(idx)]};
        for (int p : policy_.schedule()) {
            std::optional<ShiftRange> r = detail::solve_shift_range(f, problem_.B, p, approx_);
            if (r) {
                ChildRange out;
                out.precision_used = p;
                if (!r->empty()) {
                    out.lo = r->lo;
                    out.hi = r->hi;
                }
                return out;
            }
        }
        throw precision_exhausted("root-finding precision exhausted", node.describe());
    }

    bool children_satisfy_condition_c() const override { return true; }
    const char* name() const override { return "rootfind"; }

   private:
    SymmetricSearchProblem problem_;
    PrecisionPolicy policy_;
    RootApproximator approx_;
};

inline ChildRange children_rootfind(const SearchNode& node, const SymmetricSearchProblem& problem,
                                    const PrecisionPolicy& policy = {}) {
    return RootfindStrategy(problem, policy).children(node);
}

}  // namespace weilsearch

#endif  // WEILSEARCH_ROOTFIND_HPP
