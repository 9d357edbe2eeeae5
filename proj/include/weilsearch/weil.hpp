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

#ifndef WEILSEARCH_WEIL_HPP
#define WEILSEARCH_WEIL_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "sturm.hpp"

namespace weilsearch {

/**
 * Search for P(z) = sum (a_i + c_i m_i) z^i of degree 2n with all roots on
 * |z| = sqrt(q), where the k+1 top coefficients (and their mirrors) are fixed
 * and c_i = q^(n-i) c_(2n-i).
 */
struct WeilSearchProblem {
    int n = 0;
    int k = 0;
    mpz_class q = 1;
    std::vector<mpz_class> moduli;       ///< m_0..m_2n
    std::vector<mpz_class> base_coeffs;  ///< a_0..a_2n

    IntPolynomial base() const { return IntPolynomial(base_coeffs); }
    void validate() const;
};

/**
 * Search for Q(z) = sum (b_i + d_i m_i) z^i of degree n with all roots in
 * [-B, B], d_i = 0 for i >= n-k.
 *
 * moduli[i] is the modulus of the coefficient of z^i; entries for the fixed
 * coefficients (i >= n-k) are ignored.
 */
struct SymmetricSearchProblem {
    int n = 0;
    int k = 0;
    mpq_class B = 2;
    std::vector<mpz_class> moduli;       ///< m_0..m_n
    std::vector<mpz_class> base_coeffs;  ///< b_0..b_n
    /// Set when the base was negated to make b_n positive; solutions map back by negation.
    bool negated = false;

    int free_count() const noexcept { return n - k; }
    ClosedInterval interval() const { return ClosedInterval::symmetric(B); }
    IntPolynomial base() const { return IntPolynomial(base_coeffs); }
    void validate() const;
    bool is_normalized() const { return !base_coeffs.empty() && base_coeffs.back() > 0; }
    /// Copy with b_n > 0 (negating every b_i if needed).
    SymmetricSearchProblem normalized() const;
};

struct SolutionSet {
    std::vector<IntPolynomial> solutions;
    /// False when the search stopped early (decide mode or a solution cap).
    bool exactly_known = true;
};

/// True iff a_i = u * q^((D-2i)/2) * a_(D-i) for all i, with u = sign. Needs sqrt(q) for odd D.
inline bool satisfies_functional_equation(const IntPolynomial& p, const mpz_class& q, int sign) {
    if (p.is_zero()) return false;
    const int D = p.degree();
    mpz_class root = 0;
    if (D % 2 == 1) {
        if (!mpz_perfect_square_p(q.get_mpz_t())) return false;
        mpz_sqrt(root.get_mpz_t(), q.get_mpz_t());
    }
    for (int i = 0; 2 * i <= D; ++i) {
        const int e = D - 2 * i;
        mpz_class scale;
        if (D % 2 == 0)
            mpz_pow_ui(scale.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(e / 2));
        else
            mpz_pow_ui(scale.get_mpz_t(), root.get_mpz_t(), static_cast<unsigned long>(e));
        mpz_class rhs = scale * p[static_cast<std::size_t>(D - i)];
        if (sign < 0) rhs = -rhs;
        if (p[static_cast<std::size_t>(i)] != rhs) return false;
    }
    return true;
}

/// Even degree 2n with a_i = q^(n-i) a_(2n-i).
inline bool is_reciprocal(const IntPolynomial& p, const mpz_class& q) {
    return !p.is_zero() && p.degree() % 2 == 0 && satisfies_functional_equation(p, q, +1);
}

struct ReciprocalReduction {
    IntPolynomial reduced;
    std::vector<IntPolynomial> stripped;  ///< forced factors, in the order removed
    int sign = +1;                        ///< +1 reciprocal, -1 antireciprocal

    /// Multiplies the stripped factors back onto a reduced polynomial.
    IntPolynomial restore(const IntPolynomial& p) const {
        IntPolynomial r = p;
        for (const auto& f : stripped) r = r * f;
        return r;
    }
};

/**
 * Strips the factors forced by the functional equation of a real polynomial
 * with roots on |z| = sqrt(q): z + sqrt(q) (odd reciprocal), z - sqrt(q)
 * (odd antireciprocal) or z^2 - q (even antireciprocal). The result is an
 * even-degree reciprocal polynomial.
 */
inline ReciprocalReduction reduce_reciprocal(const IntPolynomial& s, const mpz_class& q) {
    if (s.is_zero()) throw invalid_problem("reduce_reciprocal: zero polynomial");
    if (q <= 0) throw invalid_problem("reduce_reciprocal: q must be positive");
    int sign = 0;
    if (satisfies_functional_equation(s, q, +1))
        sign = +1;
    else if (satisfies_functional_equation(s, q, -1))
        sign = -1;
    else {
        if (s.degree() % 2 == 1 && !mpz_perfect_square_p(q.get_mpz_t()))
            throw unsupported_problem("reduce_reciprocal: odd degree needs a square q");
        throw invalid_problem("no functional equation");
    }
    ReciprocalReduction out;
    out.sign = sign;
    IntPolynomial factor;
    if (s.degree() % 2 == 1) {
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), q.get_mpz_t());
        factor = IntPolynomial{sign > 0 ? mpz_class(root) : mpz_class(-root), mpz_class(1)};
    } else if (sign < 0) {
        factor = IntPolynomial{mpz_class(-q), mpz_class(0), mpz_class(1)};
    }
    out.reduced = s;
    if (!factor.is_zero()) {
        try {
            out.reduced = divide_exact(s, factor);
        } catch (const std::domain_error&) {
            throw invalid_problem("reduce_reciprocal: forced factor does not divide exactly");
        }
        out.stripped.push_back(factor);
    }
    if (!is_reciprocal(out.reduced, q)) throw invalid_problem("reduce_reciprocal: reduced polynomial is not reciprocal");
    return out;
}

/**
 * The Q of degree n with P(z) = z^n Q(z + q/z), for reciprocal P of degree 2n.
 *
 * Top-down triangular solve of p_(2n-i) = sum_l binom(n-i+2l, l) q^l e_(n-i+2l),
 * unit diagonal, so Q has integer coefficients.
 */
inline IntPolynomial symmetrize(const IntPolynomial& p, const mpz_class& q) {
    if (!is_reciprocal(p, q)) throw invalid_problem("symmetrize: polynomial is not reciprocal");
    const int n = p.degree() / 2;
    std::vector<mpz_class> e(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        mpz_class v = p[static_cast<std::size_t>(2 * n - i)];
        mpz_class qpow = 1;
        for (int l = 1; 2 * l <= i; ++l) {
            qpow *= q;
            v -= binomial(static_cast<unsigned long>(n - i + 2 * l), static_cast<unsigned long>(l)) * qpow *
                 e[static_cast<std::size_t>(n - i + 2 * l)];
        }
        e[static_cast<std::size_t>(n - i)] = v;
    }
    return IntPolynomial(std::move(e));
}

/// P(z) = z^n Q(z + q/z) expanded, n = deg Q.
inline IntPolynomial desymmetrize(const IntPolynomial& Q, const mpz_class& q) {
    if (Q.is_zero()) return Q;
    const int n = Q.degree();
    std::vector<mpz_class> p(static_cast<std::size_t>(2 * n) + 1);
    for (int t = 0; t <= n; ++t) {
        const mpz_class& e = Q.coeffs()[static_cast<std::size_t>(t)];
        if (e == 0) continue;
        mpz_class qpow = 1;
        for (int l = 0; l <= t; ++l) {
            p[static_cast<std::size_t>(n + t - 2 * l)] +=
                binomial(static_cast<unsigned long>(t), static_cast<unsigned long>(l)) * qpow * e;
            qpow *= q;
        }
    }
    return IntPolynomial(std::move(p));
}

inline void WeilSearchProblem::validate() const {
    if (n < 1) throw invalid_problem("n must be positive");
    if (k < 0 || k > n) throw invalid_problem("k must satisfy 0 <= k <= n");
    if (q < 1) throw invalid_problem("q must be positive");
    const std::size_t len = static_cast<std::size_t>(2 * n) + 1;
    if (moduli.size() != len) throw invalid_problem("moduli must have 2n+1 entries");
    if (base_coeffs.size() != len) throw invalid_problem("base_coeffs must have 2n+1 entries");
    for (const auto& m : moduli)
        if (m <= 0) throw invalid_problem("moduli must be positive");
    for (std::size_t i = 0; i < len; ++i)
        if (moduli[i] != moduli[len - 1 - i]) throw invalid_problem("moduli must satisfy m_i = m_(2n-i)");
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            if (!mpz_divisible_p(moduli[static_cast<std::size_t>(i)].get_mpz_t(),
                                 moduli[static_cast<std::size_t>(j)].get_mpz_t()))
                throw invalid_problem("moduli must satisfy m_j | m_i for i <= j <= n");
    if (base_coeffs.back() == 0) throw invalid_problem("leading base coefficient must be nonzero");
    if (!is_reciprocal(base(), q)) throw invalid_problem("base coefficients violate a_i = q^(n-i) a_(2n-i)");
}

inline void SymmetricSearchProblem::validate() const {
    if (n < 1) throw invalid_problem("n must be positive");
    if (k < 0 || k > n) throw invalid_problem("k must satisfy 0 <= k <= n");
    if (B <= 0) throw invalid_problem("B must be positive");
    const std::size_t len = static_cast<std::size_t>(n) + 1;
    if (moduli.size() != len) throw invalid_problem("moduli must have n+1 entries");
    if (base_coeffs.size() != len) throw invalid_problem("base_coeffs must have n+1 entries");
    if (base_coeffs.back() == 0) throw invalid_problem("leading base coefficient must be nonzero");
    for (int i = 0; i < n - k; ++i)
        if (moduli[static_cast<std::size_t>(i)] <= 0) throw invalid_problem("moduli of free coefficients must be positive");
}

inline SymmetricSearchProblem SymmetricSearchProblem::normalized() const {
    SymmetricSearchProblem out = *this;
    if (!out.base_coeffs.empty() && out.base_coeffs.back() < 0) {
        for (auto& b : out.base_coeffs) b = -b;
        out.negated = !out.negated;
    }
    return out;
}

/**
 * Maps a Weil problem to the symmetric side: b = symmetrize(a), B = 2 sqrt(q),
 * and the coefficient of z^t on the symmetric side inherits m_(n-t), the
 * modulus of the P coefficient it is triangularly tied to.
 */
inline SymmetricSearchProblem build_symmetric_problem(const WeilSearchProblem& w) {
    w.validate();
    if (!mpz_perfect_square_p(w.q.get_mpz_t())) throw unsupported_problem("nonsquare q unsupported");
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), w.q.get_mpz_t());
    SymmetricSearchProblem s;
    s.n = w.n;
    s.k = w.k;
    s.B = mpq_class(2 * root);
    IntPolynomial Q = symmetrize(w.base(), w.q);
    s.base_coeffs = Q.coeffs();
    s.base_coeffs.resize(static_cast<std::size_t>(w.n) + 1);
    s.moduli.resize(static_cast<std::size_t>(w.n) + 1);
    for (int t = 0; t <= w.n; ++t)
        s.moduli[static_cast<std::size_t>(t)] = w.moduli[static_cast<std::size_t>(w.n - t)];
    s = s.normalized();
    s.validate();
    return s;
}

/// Weil-side solution for a symmetric-side solution of build_symmetric_problem(w).
inline IntPolynomial weil_solution(const SymmetricSearchProblem& s, const IntPolynomial& Q, const mpz_class& q) {
    IntPolynomial p = desymmetrize(Q, q);
    return s.negated ? -p : p;
}

/**
 * (volume of monic root-unitary reciprocal polynomials of degree 2n,
 *  volume of the naive coefficient box), both exact.
 */
inline std::pair<mpq_class, mpq_class> volume_estimates(int n) {
    if (n < 1) throw std::invalid_argument("volume_estimates: n must be positive");
    mpq_class unitary(mpz_class(1) << n, factorial(static_cast<unsigned long>(n)));
    unitary.canonicalize();
    mpq_class box = 1;
    for (int j = 1; j <= n; ++j) {
        mpq_class ratio(2 * j, 2 * j - 1);
        ratio.canonicalize();
        for (int e = 0; e < n + 1 - j; ++e) unitary *= ratio;
        box *= 2 * binomial(static_cast<unsigned long>(2 * n), static_cast<unsigned long>(j));
    }
    return {unitary, box};
}

/// Heuristic width 4n / (j m) of the admissible range for coefficient index j.
inline mpq_class child_count_estimate(int n, const mpz_class& m, int j) {
    if (j < 1 || m < 1) throw std::invalid_argument("child_count_estimate: j and m must be positive");
    mpq_class r(mpz_class(4 * n), mpz_class(j) * m);
    r.canonicalize();
    return r;
}

}  // namespace weilsearch

#endif  // WEILSEARCH_WEIL_HPP
