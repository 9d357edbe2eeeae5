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

#ifndef WEILSEARCH_SOLVER_HPP
#define WEILSEARCH_SOLVER_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "tree_search.hpp"
#include "weil.hpp"

namespace weilsearch {

enum class ProblemForm { weil, symmetric };

/// "Congruent to the base modulo p^power, and exactly equal on the coefficients of T^0..T^(exact_below-1)".
struct CongruenceShorthand {
    mpz_class prime;
    int power = 1;
    int exact_below = 1;

    mpz_class modulus() const {
        mpz_class m;
        mpz_pow_ui(m.get_mpz_t(), prime.get_mpz_t(), static_cast<unsigned long>(power));
        return m;
    }
};

/**
 * A problem as a user states it: the base polynomial in its original form
 * (possibly odd degree or antireciprocal) plus congruence data on its
 * coefficients. Explicit moduli use 0 for "known exactly".
 */
struct ProblemSpec {
    ProblemForm form = ProblemForm::weil;
    mpz_class q = 1;  ///< weil form
    mpq_class B = 2;  ///< symmetric form
    int degree = 0;
    std::vector<mpz_class> base_coeffs;
    std::optional<int> sign;
    std::vector<mpz_class> moduli;
    std::optional<CongruenceShorthand> shorthand;
};

/// A ProblemSpec with its derived search problem.
struct PreparedProblem {
    ProblemSpec spec;
    std::optional<ReciprocalReduction> reduction;  ///< weil form only
    std::optional<WeilSearchProblem> weil;         ///< weil form only
    SymmetricSearchProblem symmetric;

    /// Maps a symmetric-side solution back to the user's polynomial form.
    IntPolynomial to_user_form(const IntPolynomial& Q) const {
        IntPolynomial r = symmetric.negated ? -Q : Q;
        if (spec.form == ProblemForm::symmetric) return r;
        return reduction->restore(desymmetrize(r, spec.q));
    }
};

namespace detail {

/// Per-index modulus with 0 = exact, in the user's indexing.
inline std::vector<mpz_class> user_moduli(const ProblemSpec& s) {
    const auto len = static_cast<std::size_t>(s.degree) + 1;
    if (s.shorthand) {
        const CongruenceShorthand& c = *s.shorthand;
        if (c.prime < 2) throw invalid_problem("moduli.prime must be at least 2");
        if (c.power < 0) throw invalid_problem("moduli.power must be nonnegative");
        if (c.exact_below < 1) throw invalid_problem("moduli.exact_below must be at least 1");
        std::vector<mpz_class> m(len, c.modulus());
        for (std::size_t i = 0; i < len && i < static_cast<std::size_t>(c.exact_below); ++i) m[i] = 0;
        return m;
    }
    if (s.moduli.size() != len) throw invalid_problem("moduli must have degree+1 entries");
    for (const auto& m : s.moduli)
        if (m < 0) throw invalid_problem("moduli entries must be nonnegative");
    return s.moduli;
}

inline mpz_class lcm_of_free(const std::vector<mpz_class>& m) {
    mpz_class l = 1;
    for (const auto& x : m)
        if (x != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_mpz_t());
    return l;
}

/**
 * Translates user moduli on a polynomial of degree D = 2n + e (e factors
 * stripped) into reduced-side moduli of length 2n+1 and the fixed-top count k.
 */
inline std::pair<std::vector<mpz_class>, int> reduced_moduli(const std::vector<mpz_class>& user, int reduced_degree,
                                                             bool stripped) {
    const int D = static_cast<int>(user.size()) - 1;
    const int n = reduced_degree / 2;
    auto exact = [&](int i) { return user[static_cast<std::size_t>(i)] == 0 || user[static_cast<std::size_t>(D - i)] == 0; };
    // reciprocity makes a_i exact iff a_(D-i) is; the exact set must be {0..j-1} and its mirror
    int j = 0;
    while (j <= D && exact(j)) ++j;
    for (int i = j; i <= D - j; ++i)
        if (exact(i)) throw unsupported_problem("moduli: exactly known coefficients must sit at the ends");
    std::vector<mpz_class> free_vals;
    for (int i = j; i <= D - j; ++i) free_vals.push_back(user[static_cast<std::size_t>(i)]);
    const int k = std::min(std::max(j, 1) - 1, n);
    std::vector<mpz_class> out(static_cast<std::size_t>(2 * n) + 1);
    if (stripped) {
        // a congruence mod m T^j passes through a monic factor unchanged; anything else does not
        for (const auto& v : free_vals)
            if (v != free_vals.front())
                throw unsupported_problem("moduli: with a forced factor only the uniform form mod m T^j is supported");
        const mpz_class m = free_vals.empty() ? mpz_class(1) : free_vals.front();
        std::fill(out.begin(), out.end(), m);
        return {out, free_vals.empty() ? n : k};
    }
    const mpz_class fill = lcm_of_free(user);
    for (int i = 0; i <= 2 * n; ++i) {
        const mpz_class& a = user[static_cast<std::size_t>(i)];
        const mpz_class& b = user[static_cast<std::size_t>(2 * n - i)];
        if (!exact(i) && a != b) throw invalid_problem("moduli must satisfy m_i = m_(2n-i)");
        out[static_cast<std::size_t>(i)] = exact(i) ? fill : a;
    }
    return {out, free_vals.empty() ? n : k};
}

}  // namespace detail

inline PreparedProblem prepare(const ProblemSpec& spec) {
    if (spec.degree < 1) throw invalid_problem("degree must be positive");
    if (spec.base_coeffs.size() != static_cast<std::size_t>(spec.degree) + 1)
        throw invalid_problem("base_coeffs must have degree+1 entries");
    if (spec.base_coeffs.back() == 0) throw invalid_problem("base_coeffs: leading coefficient must be nonzero");
    PreparedProblem out;
    out.spec = spec;
    std::vector<mpz_class> um = detail::user_moduli(spec);

    if (spec.form == ProblemForm::symmetric) {
        SymmetricSearchProblem s;
        s.n = spec.degree;
        s.B = spec.B;
        s.base_coeffs = spec.base_coeffs;
        int fixed = 0;
        while (fixed <= s.n && um[static_cast<std::size_t>(s.n - fixed)] == 0) ++fixed;
        for (int i = 0; i <= s.n - fixed; ++i)
            if (um[static_cast<std::size_t>(i)] == 0)
                throw unsupported_problem("moduli: exactly known coefficients must be the top ones");
        s.k = std::max(fixed, 1) - 1;
        s.moduli = um;
        for (int i = s.n - s.k; i <= s.n; ++i) s.moduli[static_cast<std::size_t>(i)] = 1;
        out.symmetric = s.normalized();
        out.symmetric.validate();
        return out;
    }

    if (spec.q < 1) throw invalid_problem("q must be positive");
    ReciprocalReduction red = reduce_reciprocal(IntPolynomial(spec.base_coeffs), spec.q);
    if (spec.sign && *spec.sign != red.sign) throw invalid_problem("sign does not match the base coefficients");
    auto [moduli, k] = detail::reduced_moduli(um, red.reduced.degree(), !red.stripped.empty());
    WeilSearchProblem w;
    w.n = red.reduced.degree() / 2;
    w.k = k;
    w.q = spec.q;
    w.moduli = std::move(moduli);
    w.base_coeffs = red.reduced.coeffs();
    out.reduction = std::move(red);
    out.symmetric = build_symmetric_problem(w);
    out.weil = std::move(w);
    return out;
}

struct SolveResult {
    SearchReport report;
    std::vector<IntPolynomial> solutions;  ///< in the user's form
};

inline SolveResult solve(const PreparedProblem& p, const SearchOptions& opts) {
    SolveResult r;
    r.report = search(p.symmetric, opts);
    for (const auto& Q : r.report.solutions.solutions) r.solutions.push_back(p.to_user_form(Q));
    return r;
}

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/**
 * Checks a candidate in the user's form against every constraint, working
 * directly on its coefficients rather than through the search transform.
 */
inline std::vector<CheckResult> verify(const PreparedProblem& p, const std::vector<mpz_class>& candidate) {
    std::vector<CheckResult> out;
    const ProblemSpec& s = p.spec;
    const IntPolynomial cand(candidate);
    const bool deg_ok = cand.degree() == s.degree;
    out.push_back({"degree", deg_ok, "degree " + std::to_string(cand.is_zero() ? -1 : cand.degree())});

    const std::vector<mpz_class> um = detail::user_moduli(s);
    bool cong = deg_ok;
    std::string why;
    for (int i = 0; deg_ok && i <= s.degree; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        mpz_class diff = cand[ui] - s.base_coeffs[ui];
        const bool ok = um[ui] == 0 ? diff == 0 : mpz_divisible_p(diff.get_mpz_t(), um[ui].get_mpz_t()) != 0;
        if (!ok && cong) {
            cong = false;
            why = "coefficient " + std::to_string(i);
        }
    }
    out.push_back({"congruences", cong, why});

    if (s.form == ProblemForm::symmetric) {
        bool prefix = deg_ok;
        for (int i = s.degree - p.symmetric.k; deg_ok && i <= s.degree; ++i)
            if (cand[static_cast<std::size_t>(i)] != s.base_coeffs[static_cast<std::size_t>(i)]) prefix = false;
        out.push_back({"prefix", prefix, ""});
        const bool real = deg_ok && all_roots_in(cand, ClosedInterval::symmetric(s.B));
        out.push_back({"roots_in_interval", real, ""});
        return out;
    }

    const int sign = p.reduction->sign;
    const bool fe = deg_ok && satisfies_functional_equation(cand, s.q, sign);
    out.push_back({"functional_equation", fe, sign > 0 ? "reciprocal" : "antireciprocal"});
    bool prefix = deg_ok;
    for (int i = 0; deg_ok && i <= p.weil->k; ++i) {
        const auto top = static_cast<std::size_t>(s.degree - i);
        if (cand[top] != s.base_coeffs[top]) prefix = false;
    }
    out.push_back({"prefix", prefix, "top " + std::to_string(p.weil->k + 1) + " coefficients"});
    bool unitary = false;
    if (fe) {
        try {
            ReciprocalReduction red = reduce_reciprocal(cand, s.q);
            unitary = all_roots_in(symmetrize(red.reduced, s.q), ClosedInterval::symmetric(p.symmetric.B));
        } catch (const invalid_problem&) {
            unitary = false;
        }
    }
    out.push_back({"root_unitary", unitary, "all roots on |z| = sqrt(q)"});
    return out;
}

}  // namespace weilsearch

#endif  // WEILSEARCH_SOLVER_HPP
