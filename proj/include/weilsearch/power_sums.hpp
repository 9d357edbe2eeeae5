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

#ifndef WEILSEARCH_POWER_SUMS_HPP
#define WEILSEARCH_POWER_SUMS_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "polynomial.hpp"

namespace weilsearch {

/// s_0, s_1, ..., s_J: power sums of the root multiset of a polynomial.
struct PowerSums {
    std::vector<mpq_class> values;

    const mpq_class& operator[](std::size_t j) const { return values[j]; }
    std::size_t size() const noexcept { return values.size(); }
    friend bool operator==(const PowerSums&, const PowerSums&) = default;
};

/**
 * Next power sum by the Newton identities.
 *
 * `top` holds c_n, c_{n-1}, ..., (top[i] = c_{n-i}); entries past the end are
 * taken as zero. `known` holds s_0..s_{j-1}. Returns s_j.
 */
template <class Coeff>
mpq_class next_power_sum(const std::vector<Coeff>& top, const std::vector<mpq_class>& known) {
    const std::size_t j = known.size();
    mpq_class acc = 0;
    if (j < top.size()) acc = mpq_class(top[j]) * static_cast<long>(j);
    const std::size_t lim = std::min(j, top.size());
    for (std::size_t i = 1; i < lim; ++i) acc += mpq_class(top[i]) * known[j - i];
    return -acc / mpq_class(top[0]);
}

/// Power sums s_0..s_J of the roots of p (Newton identities, extended past deg p by the linear recurrence).
inline PowerSums power_sums(const RatPolynomial& p, std::size_t J) {
    if (p.is_zero()) throw std::domain_error("power_sums: zero polynomial");
    const int n = p.degree();
    std::vector<mpq_class> top(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) top[static_cast<std::size_t>(i)] = p.coeffs()[static_cast<std::size_t>(n - i)];
    std::vector<mpq_class> s;
    s.reserve(J + 1);
    s.emplace_back(n);
    while (s.size() <= J) s.push_back(next_power_sum(top, s));
    return {std::move(s)};
}

inline PowerSums power_sums(const IntPolynomial& p, std::size_t J) { return power_sums(to_rational(p), J); }

/**
 * Inverse of power_sums for a degree-n polynomial with leading coefficient c_n:
 * recovers c_{n-1}, ..., c_0 from s_1..s_n.
 */
inline RatPolynomial coeffs_from_power_sums(const PowerSums& s, const mpq_class& leading, int n) {
    if (leading == 0) throw std::invalid_argument("coeffs_from_power_sums: zero leading coefficient");
    if (n < 0 || s.size() < static_cast<std::size_t>(n) + 1)
        throw std::invalid_argument("coeffs_from_power_sums: need s_0..s_n");
    std::vector<mpq_class> top{leading};
    for (int j = 1; j <= n; ++j) {
        mpq_class acc = 0;
        for (int i = 0; i < j; ++i) acc += top[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j - i)];
        top.push_back(-acc / j);
    }
    std::vector<mpq_class> c(top.rbegin(), top.rend());
    return RatPolynomial(std::move(c));
}

/**
 * C_i with C_i(B cos t) = B cos(i t), from C_0 = B, C_1 = z and
 * C_{i+1} = (2z/B) C_i - C_{i-1}.
 */
inline RatPolynomial chebyshev_rescaled(int i, const mpq_class& B) {
    if (B <= 0) throw std::invalid_argument("chebyshev_rescaled: B must be positive");
    if (i < 0) throw std::invalid_argument("chebyshev_rescaled: negative index");
    RatPolynomial prev = RatPolynomial::constant(B);
    if (i == 0) return prev;
    RatPolynomial cur{mpq_class(0), mpq_class(1)};
    const RatPolynomial two_z_over_b{mpq_class(0), mpq_class(2) / B};
    for (int k = 1; k < i; ++k) {
        RatPolynomial next = two_z_over_b * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace weilsearch

#endif  // WEILSEARCH_POWER_SUMS_HPP
