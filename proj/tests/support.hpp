// Shared generators and independent oracles for the test suites.
//
// The oracles here deliberately avoid the library's Sturm machinery and
// transforms: real-rootedness in an interval is decided through Hankel forms
// of power sums, and symmetrization goes through z^i + q^i z^-i = V_i(z + q/z).

#ifndef WEILSEARCH_TESTS_SUPPORT_HPP
#define WEILSEARCH_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "weilsearch/weilsearch.hpp"

namespace ws_test {

using weilsearch::IntPolynomial;
using weilsearch::RatPolynomial;

class Rng {
   public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }

    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(uniform(0, static_cast<long>(v.size()) - 1))];
    }

    /// Rational in [-B, B] with denominator at most `den`.
    mpq_class rational_in(const mpq_class& B, long den) {
        const long d = uniform(1, den);
        mpz_class lim = weilsearch::floor_of(B * d);
        mpz_class num = uniform(-lim.get_si(), lim.get_si());
        mpq_class r(num, d);
        r.canonicalize();
        return r;
    }

    std::mt19937_64& engine() { return eng_; }

   private:
    std::mt19937_64 eng_;
};

/// a / b in canonical form.
inline mpq_class frac(long a, long b) {
    mpq_class r(a, b);
    r.canonicalize();
    return r;
}

inline mpz_class mod_floor(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline RatPolynomial from_roots(const std::vector<mpq_class>& roots, const mpq_class& lead = 1) {
    RatPolynomial p = RatPolynomial::constant(lead);
    for (const auto& r : roots) p = p * RatPolynomial{mpq_class(-r), mpq_class(1)};
    return p;
}

inline std::size_t distinct_in(std::vector<mpq_class> roots, const mpq_class& lo, const mpq_class& hi) {
    std::set<mpq_class> s;
    for (auto& r : roots)
        if (r >= lo && r <= hi) s.insert(r);
    return s.size();
}

/// Power sums s_0..s_J by the Newton recurrence, written independently of the library.
inline std::vector<mpq_class> oracle_power_sums(const RatPolynomial& p, int J) {
    const int n = p.degree();
    std::vector<mpq_class> e(static_cast<std::size_t>(n) + 1);  // e[i] = c_(n-i) / c_n
    for (int i = 0; i <= n; ++i) e[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(n - i)] / p.leading();
    std::vector<mpq_class> s(static_cast<std::size_t>(J) + 1);
    s[0] = n;
    for (int j = 1; j <= J; ++j) {
        mpq_class acc = j <= n ? mpq_class(e[static_cast<std::size_t>(j)] * j) : mpq_class(0);
        for (int i = 1; i < j && i <= n; ++i) acc += e[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j - i)];
        s[static_cast<std::size_t>(j)] = -acc;
    }
    return s;
}

/// Exact positive-semidefiniteness of a symmetric rational matrix by symmetric pivoting.
inline bool is_psd(std::vector<std::vector<mpq_class>> a) {
    std::size_t n = a.size();
    std::vector<bool> used(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t piv = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (used[i]) continue;
            if (a[i][i] < 0) return false;
            if (a[i][i] > 0 && piv == n) piv = i;
        }
        if (piv == n) {
            // all remaining diagonals vanish: PSD only if the remaining block is zero
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (!used[i] && !used[j] && a[i][j] != 0) return false;
            return true;
        }
        used[piv] = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (used[i] || a[i][piv] == 0) continue;
            mpq_class f = a[i][piv] / a[piv][piv];
            for (std::size_t j = 0; j < n; ++j)
                if (!used[j]) a[i][j] -= f * a[piv][j];
        }
    }
    return true;
}

/**
 * All complex roots of p real and inside [-B, B], decided by Hermite's
 * criterion: the Hankel form [s_(i+j)] and the localized form
 * [B^2 s_(i+j) - s_(i+j+2)] are both positive semidefinite.
 */
inline bool oracle_roots_in(const RatPolynomial& p, const mpq_class& B) {
    const int n = p.degree();
    if (n <= 0) return true;
    std::vector<mpq_class> s = oracle_power_sums(p, 2 * n);
    const auto N = static_cast<std::size_t>(n);
    std::vector<std::vector<mpq_class>> H(N, std::vector<mpq_class>(N)), M(N, std::vector<mpq_class>(N));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            H[i][j] = s[i + j];
            M[i][j] = B * B * s[i + j] - s[i + j + 2];
        }
    return is_psd(std::move(H)) && is_psd(std::move(M));
}

inline bool oracle_roots_in(const IntPolynomial& p, const mpq_class& B) {
    return oracle_roots_in(weilsearch::to_rational(p), B);
}

/// Q with P(z) = z^n Q(z + q/z), through V_0 = 2, V_1 = w, V_(i+1) = w V_i - q V_(i-1).
inline IntPolynomial oracle_symmetrize(const IntPolynomial& P, const mpz_class& q) {
    const int n = P.degree() / 2;
    IntPolynomial Q = IntPolynomial::constant(P[static_cast<std::size_t>(n)]);
    IntPolynomial prev = IntPolynomial::constant(2), cur{mpz_class(0), mpz_class(1)};
    const IntPolynomial w{mpz_class(0), mpz_class(1)};
    for (int i = 1; i <= n; ++i) {
        Q += cur * P[static_cast<std::size_t>(n + i)];
        IntPolynomial next = w * cur - prev * q;
        prev = cur;
        cur = next;
    }
    return Q;
}

/// Root-unitarity (all roots on |z| = sqrt(q)) of a reciprocal even-degree P, with square q.
inline bool oracle_weil(const IntPolynomial& P, const mpz_class& q) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), q.get_mpz_t());
    return oracle_roots_in(oracle_symmetrize(P, q), mpq_class(2 * r));
}

inline bool coefficient_less(const IntPolynomial& a, const IntPolynomial& b) {
    return weilsearch::detail::coefficient_less(a, b);
}

inline std::vector<IntPolynomial> sorted(std::vector<IntPolynomial> v) {
    std::sort(v.begin(), v.end(), coefficient_less);
    return v;
}

/// A small random Weil problem (reciprocal, degree 2n, valid modulus chain) and its brute-force box size.
struct RandomWeilInstance {
    weilsearch::WeilSearchProblem problem;
    double box_size = 0;
};

inline double weil_box_size(const weilsearch::WeilSearchProblem& w) {
    double size = 1;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), w.q.get_mpz_t());
    const mpz_class lead = abs(w.base_coeffs.back());
    for (int i = w.k + 1; i <= w.n; ++i) {
        mpz_class bound = weilsearch::binomial(static_cast<unsigned long>(2 * w.n), static_cast<unsigned long>(i)) * lead;
        for (int e = 0; e < i; ++e) bound *= r;
        size *= (2 * bound.get_d() + 1) / w.moduli[static_cast<std::size_t>(2 * w.n - i)].get_d() + 1;
    }
    return size;
}

/**
 * Every P in the naive box |a_(2n-i)| <= binom(2n,i) q^(i/2) |a_2n| that
 * matches the problem's fixed top and congruences, filtered by oracle_weil.
 */
inline std::vector<IntPolynomial> brute_force_weil(const weilsearch::WeilSearchProblem& w) {
    const int n = w.n;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), w.q.get_mpz_t());
    const mpz_class lead = abs(w.base_coeffs.back());
    std::vector<std::vector<mpz_class>> choices;  // for a_(2n-i), i = k+1..n
    for (int i = w.k + 1; i <= n; ++i) {
        const auto idx = static_cast<std::size_t>(2 * n - i);
        mpz_class bound = weilsearch::binomial(static_cast<unsigned long>(2 * n), static_cast<unsigned long>(i)) * lead;
        for (int e = 0; e < i; ++e) bound *= r;
        const mpz_class& m = w.moduli[idx];
        const mpz_class& b = w.base_coeffs[idx];
        // smallest value >= -bound congruent to b mod m
        mpz_class start = -bound + mod_floor(b + bound, m);
        std::vector<mpz_class> vals;
        for (mpz_class v = start; v <= bound; v += m) vals.push_back(v);
        choices.push_back(std::move(vals));
    }
    std::vector<IntPolynomial> out;
    std::vector<mpz_class> a = w.base_coeffs;
    std::function<void(std::size_t)> rec = [&](std::size_t level) {
        if (level == choices.size()) {
            for (int i = 0; i < n; ++i) {
                mpz_class qp;
                mpz_pow_ui(qp.get_mpz_t(), w.q.get_mpz_t(), static_cast<unsigned long>(n - i));
                a[static_cast<std::size_t>(i)] = qp * a[static_cast<std::size_t>(2 * n - i)];
            }
            IntPolynomial P(a);
            if (oracle_weil(P, w.q)) out.push_back(P);
            return;
        }
        const int i = w.k + 1 + static_cast<int>(level);
        for (const auto& v : choices[level]) {
            a[static_cast<std::size_t>(2 * n - i)] = v;
            rec(level + 1);
        }
    };
    rec(0);
    return sorted(out);
}

/**
 * Random reciprocal P_0 = desymmetrize(c * prod (z - r_i)) from roots in [-B, B], perturbed off the solution set with probability 1/2, with
 * a random modulus chain drawn from {1,2,4} or {1,3} and a random k.
 */
inline weilsearch::WeilSearchProblem random_weil_problem(Rng& rng, int max_n, const std::vector<long>& qs = {1, 1, 1, 4}) {
    weilsearch::WeilSearchProblem w;
    w.n = static_cast<int>(rng.uniform(1, max_n));
    w.q = rng.pick(qs);
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), w.q.get_mpz_t());
    const mpq_class B(2 * r);
    w.k = static_cast<int>(rng.uniform(0, w.n - 1));
    std::vector<long> ladder = rng.coin() ? std::vector<long>{4, 2, 1} : std::vector<long>{3, 1};
    long cap = rng.pick(std::vector<long>{1, 2, 3, 4});
    // moduli non-increasing (in the divisibility order) from index 0 up to n
    std::vector<mpz_class> chain(static_cast<std::size_t>(w.n) + 1);
    std::size_t pos = 0;
    while (pos + 1 < ladder.size() && ladder[pos] > cap) ++pos;
    for (int i = 0; i <= w.n; ++i) {
        if (pos + 1 < ladder.size() && rng.coin(0.3)) ++pos;
        chain[static_cast<std::size_t>(i)] = ladder[pos];
    }
    w.moduli.resize(static_cast<std::size_t>(2 * w.n) + 1);
    for (int i = 0; i <= w.n; ++i) {
        w.moduli[static_cast<std::size_t>(i)] = chain[static_cast<std::size_t>(i)];
        w.moduli[static_cast<std::size_t>(2 * w.n - i)] = chain[static_cast<std::size_t>(i)];
    }
    // integer roots, plus one half-integer root when the leading coefficient is 2
    mpz_class lead = rng.uniform(1, 2);
    std::vector<mpq_class> roots;
    for (int i = 0; i < w.n; ++i) roots.push_back(rng.rational_in(B, (lead == 2 && i == 0) ? 2 : 1));
    IntPolynomial Q = weilsearch::to_integer(from_roots(roots, mpq_class(lead)));
    IntPolynomial P = weilsearch::desymmetrize(Q, w.q);
    std::vector<mpz_class> a = P.coeffs();
    if (rng.coin()) {
        // shift the free top coefficients a_(2n-i), i = k+1..n, by multiples of their moduli
        for (int i = w.k + 1; i <= w.n; ++i) {
            const auto idx = static_cast<std::size_t>(2 * w.n - i);
            a[idx] += rng.uniform(-1, 1) * w.moduli[idx];
        }
        for (int i = 0; i < w.n; ++i) {
            mpz_class qp;
            mpz_pow_ui(qp.get_mpz_t(), w.q.get_mpz_t(), static_cast<unsigned long>(w.n - i));
            a[static_cast<std::size_t>(i)] = qp * a[static_cast<std::size_t>(2 * w.n - i)];
        }
    }
    w.base_coeffs = a;
    return w;
}

}  // namespace ws_test

#endif  // WEILSEARCH_TESTS_SUPPORT_HPP
