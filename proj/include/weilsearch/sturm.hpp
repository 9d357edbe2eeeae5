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

#ifndef WEILSEARCH_STURM_HPP
#define WEILSEARCH_STURM_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "polynomial.hpp"

namespace weilsearch {

/// Closed interval [lo, hi] with exact rational endpoints.
struct ClosedInterval {
    mpq_class lo;
    mpq_class hi;

    ClosedInterval(mpq_class lo_, mpq_class hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
        if (lo > hi) throw std::invalid_argument("ClosedInterval: lo > hi");
    }

    static ClosedInterval symmetric(const mpq_class& radius) { return {mpq_class(-radius), radius}; }

    bool contains(const mpq_class& x) const { return lo <= x && x <= hi; }
};

namespace detail {

/**
 * Pseudo-remainder with a positive multiplier: returns r with
 * |lc(b)|^e * a = q*b + r for some e >= 0 and deg r < deg b.
 * Keeps the sign structure required by Sturm sequences.
 */
inline std::vector<mpz_class> positive_pseudo_remainder(std::vector<mpz_class> r, const std::vector<mpz_class>& b) {
    const std::size_t db = b.size() - 1;
    const mpz_class& lb = b.back();
    const bool negative = lb < 0;
    mpz_class abs_lb = abs(lb);
    mpz_class lr;
    while (!r.empty() && r.size() - 1 >= db) {
        const std::size_t dr = r.size() - 1;
        lr = r.back();
        if (negative) lr = -lr;
        const std::size_t shift = dr - db;
        if (abs_lb != 1)
            for (std::size_t i = 0; i < dr; ++i) r[i] *= abs_lb;
        for (std::size_t i = 0; i < db; ++i) mpz_submul(r[i + shift].get_mpz_t(), lr.get_mpz_t(), b[i].get_mpz_t());
        r.pop_back();
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return r;
}

inline void make_primitive(std::vector<mpz_class>& v) {
    mpz_class g = 0;
    for (const auto& c : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) return;
    }
    if (g == 0 || g == 1) return;
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

using weilsearch::sign_at;

}  // namespace detail

/// Primitive gcd over Z[z] (equivalently Q[z]), normalized with positive leading coefficient.
inline IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero()) return normalized_integer(b);
    if (b.is_zero()) return normalized_integer(a);
    std::vector<mpz_class> x = primitive_part(a).coeffs();
    std::vector<mpz_class> y = primitive_part(b).coeffs();
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        std::vector<mpz_class> r = detail::positive_pseudo_remainder(x, y);
        detail::make_primitive(r);
        x = std::move(y);
        y = std::move(r);
    }
    return normalized_integer(IntPolynomial(std::move(x)));
}

inline RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b) {
    return to_rational(gcd(clear_denominators(a).numerator, clear_denominators(b).numerator));
}

/**
 * P / gcd(P, P'), as a primitive integer polynomial with positive leading
 * coefficient. Same root set as P with every multiplicity collapsed to one.
 */
inline RatPolynomial squarefree_part(const RatPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
    IntPolynomial z = normalized_integer(p);
    IntPolynomial g = gcd(z, derivative(z));
    if (g.degree() == 0) return to_rational(z);
    auto [q, r] = divide(to_rational(z), to_rational(g));
    return to_rational(normalized_integer(q));
}

/**
 * Sturm sequence of an integer polynomial, reduced by the gcd of P and P' so
 * that it counts distinct roots.
 */
class SturmSequence {
   public:
    explicit SturmSequence(const IntPolynomial& p) {
        if (p.is_zero()) throw std::domain_error("Sturm sequence of the zero polynomial");
        IntPolynomial z = normalized_integer(p);
        seq_.push_back(z.coeffs());
        if (z.degree() == 0) return;
        seq_.push_back(primitive_part(derivative(z)).coeffs());
        while (true) {
            std::vector<mpz_class> r = detail::positive_pseudo_remainder(seq_[seq_.size() - 2], seq_.back());
            if (r.empty()) break;
            for (auto& c : r) c = -c;
            detail::make_primitive(r);
            seq_.push_back(std::move(r));
        }
        if (seq_.back().size() > 1) {
            // gcd(P, P') is nonconstant: divide it out of every element
            RatPolynomial g = to_rational(IntPolynomial(seq_.back()));
            for (auto& e : seq_) {
                auto [q, rem] = divide(to_rational(IntPolynomial(e)), g);
                e = primitive_part(clear_denominators(q).numerator).coeffs();
            }
        }
    }

    /// Sign variations at x, zeros skipped.
    std::size_t variations(const mpq_class& x) const {
        std::size_t v = 0;
        int last = 0;
        for (const auto& e : seq_) {
            int s = detail::sign_at(e, x);
            if (s == 0) continue;
            if (last != 0 && s != last) ++v;
            last = s;
        }
        return v;
    }

    /// Number of distinct roots in the closed interval.
    std::size_t count(const ClosedInterval& i) const {
        std::size_t at_lo = detail::sign_at(seq_.front(), i.lo) == 0 ? 1 : 0;
        if (i.lo == i.hi) return at_lo;
        return variations(i.lo) - variations(i.hi) + at_lo;
    }

    /// Degree of the squarefree part.
    int distinct_root_count() const { return static_cast<int>(seq_.front().size()) - 1; }

    const std::vector<std::vector<mpz_class>>& elements() const { return seq_; }

   private:
    std::vector<std::vector<mpz_class>> seq_;
};

inline std::size_t sturm_count(const IntPolynomial& p, const ClosedInterval& i) {
    if (p.is_zero()) throw std::domain_error("sturm_count: zero polynomial");
    return SturmSequence(p).count(i);
}

/// Number of distinct real roots of p in the closed interval i.
inline std::size_t sturm_count(const RatPolynomial& p, const ClosedInterval& i) {
    if (p.is_zero()) throw std::domain_error("sturm_count: zero polynomial");
    return sturm_count(clear_denominators(p).numerator, i);
}

/**
 * True iff every complex root of p is real and lies in i.
 *
 * Builds the Sturm sequence with early rejection: for all distinct roots to
 * be real, each remainder must drop the degree by exactly one and keep a
 * positive leading coefficient.
 */
inline bool all_roots_in(const IntPolynomial& p, const ClosedInterval& i) {
    if (p.is_zero()) throw std::domain_error("all_roots_in: zero polynomial");
    IntPolynomial z = normalized_integer(p);
    const int n = z.degree();
    if (n == 0) return true;
    if (n == 1) {
        mpq_class root(-z.coeffs()[0], z.coeffs()[1]);
        root.canonicalize();
        return i.contains(root);
    }
    // endpoint signs: every root <= hi means P(hi) >= 0, every root >= lo means (-1)^n P(lo) >= 0
    int s_hi = sign_at(z, i.hi);
    if (s_hi < 0) return false;
    int s_lo = sign_at(z, i.lo);
    if ((n % 2 == 0 ? s_lo : -s_lo) < 0) return false;

    std::vector<std::vector<mpz_class>> seq;
    seq.reserve(static_cast<std::size_t>(n) + 1);
    seq.push_back(z.coeffs());
    seq.push_back(primitive_part(derivative(z)).coeffs());
    while (true) {
        std::vector<mpz_class> r = detail::positive_pseudo_remainder(seq[seq.size() - 2], seq.back());
        if (r.empty()) break;
        if (r.size() + 1 != seq.back().size()) return false;
        for (auto& c : r) c = -c;
        if (r.back() < 0) return false;
        detail::make_primitive(r);
        seq.push_back(std::move(r));
    }
    if (seq.back().size() > 1) {
        RatPolynomial g = to_rational(IntPolynomial(seq.back()));
        for (auto& e : seq) {
            auto [q, rem] = divide(to_rational(IntPolynomial(e)), g);
            e = primitive_part(clear_denominators(q).numerator).coeffs();
        }
    }
    // The reduced sequence has all positive leading coefficients, so V(+inf) = 0
    // and V(-inf) = L = number of distinct roots. All of them lie in [lo, hi]
    // iff V(hi) = 0 and V(lo) + [P(lo) = 0] = L.
    const std::size_t L = seq.size() - 1;
    auto variations = [&](const mpq_class& x) {
        std::size_t v = 0;
        int last = 0;
        for (const auto& e : seq) {
            int s = detail::sign_at(e, x);
            if (s == 0) continue;
            if (last != 0 && s != last) ++v;
            last = s;
        }
        return v;
    };
    if (variations(i.hi) != 0) return false;
    std::size_t at_lo = detail::sign_at(seq.front(), i.lo) == 0 ? 1 : 0;
    return variations(i.lo) + at_lo == L;
}

inline bool all_roots_in(const RatPolynomial& p, const ClosedInterval& i) {
    if (p.is_zero()) throw std::domain_error("all_roots_in: zero polynomial");
    return all_roots_in(clear_denominators(p).numerator, i);
}

}  // namespace weilsearch

#endif  // WEILSEARCH_STURM_HPP
