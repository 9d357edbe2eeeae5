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

#ifndef WEILSEARCH_POLYNOMIAL_HPP
#define WEILSEARCH_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace weilsearch {

/**
 * Dense univariate polynomial with exact coefficients.
 *
 * coeffs()[i] is the coefficient of z^i. Trailing zeros are always trimmed,
 * so the zero polynomial has no coefficients and degree() == zero_degree.
 */
template <class Coeff>
class Polynomial {
   public:
    using coeff_type = Coeff;

    /// Degree reported for the zero polynomial (stands in for -infinity).
    static constexpr int zero_degree = std::numeric_limits<int>::min();

    Polynomial() = default;
    explicit Polynomial(std::vector<Coeff> coeffs) : data_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Coeff> coeffs) : data_(coeffs) { trim(); }

    static Polynomial constant(const Coeff& c) { return Polynomial(std::vector<Coeff>{c}); }

    static Polynomial monomial(const Coeff& c, int deg) {
        std::vector<Coeff> v(static_cast<std::size_t>(deg) + 1);
        v.back() = c;
        return Polynomial(std::move(v));
    }

    int degree() const noexcept { return data_.empty() ? zero_degree : static_cast<int>(data_.size()) - 1; }
    bool is_zero() const noexcept { return data_.empty(); }
    bool is_constant() const noexcept { return data_.size() <= 1; }

    const Coeff& leading() const {
        if (data_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
        return data_.back();
    }

    /// Coefficient of z^i; zero beyond the degree.
    Coeff operator[](std::size_t i) const { return i < data_.size() ? data_[i] : Coeff(0); }

    const std::vector<Coeff>& coeffs() const noexcept { return data_; }

    template <class X>
    X operator()(const X& x) const {
        X acc(0);
        for (auto it = data_.rbegin(); it != data_.rend(); ++it) {
            acc *= x;
            acc += *it;
        }
        return acc;
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& c : r.data_) c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& rhs) {
        if (rhs.data_.size() > data_.size()) data_.resize(rhs.data_.size());
        for (std::size_t i = 0; i < rhs.data_.size(); ++i) data_[i] += rhs.data_[i];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& rhs) {
        if (rhs.data_.size() > data_.size()) data_.resize(rhs.data_.size());
        for (std::size_t i = 0; i < rhs.data_.size(); ++i) data_[i] -= rhs.data_[i];
        trim();
        return *this;
    }

    Polynomial& operator*=(const Coeff& s) {
        if (s == 0) {
            data_.clear();
            return *this;
        }
        for (auto& c : data_) c *= s;
        return *this;
    }

    Polynomial& operator*=(const Polynomial& rhs) {
        *this = *this * rhs;
        return *this;
    }

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(Polynomial lhs, const Coeff& s) { return lhs *= s; }
    friend Polynomial operator*(const Coeff& s, Polynomial rhs) { return rhs *= s; }

    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
        if (lhs.is_zero() || rhs.is_zero()) return Polynomial();
        std::vector<Coeff> out(lhs.data_.size() + rhs.data_.size() - 1);
        for (std::size_t i = 0; i < lhs.data_.size(); ++i) {
            if (lhs.data_[i] == 0) continue;
            for (std::size_t j = 0; j < rhs.data_.size(); ++j) out[i + j] += lhs.data_[i] * rhs.data_[j];
        }
        return Polynomial(std::move(out));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.data_ == b.data_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Sets the coefficient of z^i, growing or trimming as needed.
    void set(std::size_t i, const Coeff& c) {
        if (i >= data_.size()) {
            if (c == 0) return;
            data_.resize(i + 1);
        }
        data_[i] = c;
        trim();
    }

   private:
    void trim() {
        while (!data_.empty() && data_.back() == 0) data_.pop_back();
    }

    std::vector<Coeff> data_;
};

using IntPolynomial = Polynomial<mpz_class>;
using RatPolynomial = Polynomial<mpq_class>;

template <class Coeff>
std::ostream& operator<<(std::ostream& os, const Polynomial<Coeff>& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Coeff& c = p.coeffs()[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Coeff mag = c < 0 ? Coeff(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1 || i == 0) {
            os << mag;
            if (i > 0) os << "*";
        }
        if (i >= 1) os << "z";
        if (i >= 2) os << "^" << i;
    }
    return os;
}

/// n-th formal derivative; n > degree gives the zero polynomial.
template <class Coeff>
Polynomial<Coeff> nth_derivative(const Polynomial<Coeff>& p, int n) {
    if (n < 0) throw std::invalid_argument("negative derivative order");
    const int d = p.degree();
    if (p.is_zero() || n > d) return Polynomial<Coeff>();
    std::vector<Coeff> out(static_cast<std::size_t>(d - n + 1));
    // falling factorial i*(i-1)*...*(i-n+1), updated incrementally from i = n upward
    mpz_class fall = 1;
    for (int t = 2; t <= n; ++t) fall *= t;
    for (int i = n; i <= d; ++i) {
        if (i > n) {
            fall *= i;
            fall /= (i - n);
        }
        out[static_cast<std::size_t>(i - n)] = p.coeffs()[static_cast<std::size_t>(i)] * Coeff(fall);
    }
    return Polynomial<Coeff>(std::move(out));
}

template <class Coeff>
Polynomial<Coeff> derivative(const Polynomial<Coeff>& p) {
    return nth_derivative(p, 1);
}

inline RatPolynomial to_rational(const IntPolynomial& p) {
    std::vector<mpq_class> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.emplace_back(c);
    return RatPolynomial(std::move(v));
}

/// Returns true iff every coefficient is an integer.
inline bool has_integer_coeffs(const RatPolynomial& p) {
    return std::all_of(p.coeffs().begin(), p.coeffs().end(),
                       [](const mpq_class& c) { return c.get_den() == 1; });
}

/// Converts a polynomial with integer coefficients; throws otherwise.
inline IntPolynomial to_integer(const RatPolynomial& p) {
    std::vector<mpz_class> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        if (c.get_den() != 1) throw std::domain_error("polynomial has a non-integer coefficient");
        v.emplace_back(c.get_num());
    }
    return IntPolynomial(std::move(v));
}

/// p = numerator / denominator with denominator > 0 the lcm of the coefficient denominators.
struct ScaledPolynomial {
    IntPolynomial numerator;
    mpz_class denominator = 1;
};

inline ScaledPolynomial clear_denominators(const RatPolynomial& p) {
    mpz_class den = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.emplace_back(c.get_num() * (den / c.get_den()));
    return {IntPolynomial(std::move(v)), den};
}

/// Positive gcd of the coefficients; zero for the zero polynomial.
inline mpz_class content(const IntPolynomial& p) {
    mpz_class g = 0;
    for (const auto& c : p.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

/// Divides out the content; the sign of the leading coefficient is preserved.
inline IntPolynomial primitive_part(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    mpz_class g = content(p);
    if (g == 1) return p;
    std::vector<mpz_class> v(p.coeffs());
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return IntPolynomial(std::move(v));
}

/// Primitive integer polynomial with positive leading coefficient and the same roots as p.
inline IntPolynomial normalized_integer(const RatPolynomial& p) {
    IntPolynomial r = primitive_part(clear_denominators(p).numerator);
    if (!r.is_zero() && r.leading() < 0) r = -r;
    return r;
}

inline IntPolynomial normalized_integer(const IntPolynomial& p) {
    IntPolynomial r = primitive_part(p);
    if (!r.is_zero() && r.leading() < 0) r = -r;
    return r;
}

/// Euclidean division over Q: a = q*b + r with deg r < deg b.
inline std::pair<RatPolynomial, RatPolynomial> divide(const RatPolynomial& a, const RatPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {RatPolynomial(), a};
    std::vector<mpq_class> rem(a.coeffs());
    const int db = b.degree();
    const int dq = a.degree() - db;
    std::vector<mpq_class> quot(static_cast<std::size_t>(dq) + 1);
    const mpq_class& lb = b.leading();
    for (int i = dq; i >= 0; --i) {
        mpq_class t = rem[static_cast<std::size_t>(i + db)] / lb;
        quot[static_cast<std::size_t>(i)] = t;
        if (t == 0) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i + j)] -= t * b.coeffs()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

/// Exact division over Z; throws std::domain_error when b does not divide a in Z[z].
inline IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
    auto [q, r] = divide(to_rational(a), to_rational(b));
    if (!r.is_zero() || !has_integer_coeffs(q)) throw std::domain_error("polynomial does not divide exactly");
    return to_integer(q);
}

/**
 * Sign at the rational point x of the polynomial with coefficients c, exactly.
 *
 * Uses the homogenized form sum c_i a^i b^(d-i) for x = a/b with b > 0, so no
 * rational arithmetic is needed.
 */
inline int sign_at(const std::vector<mpz_class>& c, const mpq_class& x) {
    if (c.empty()) return 0;
    const mpz_class& a = x.get_num();
    const mpz_class& b = x.get_den();
    mpz_class acc = c.back();
    if (b == 1) {
        for (std::size_t i = c.size() - 1; i-- > 0;) {
            acc *= a;
            acc += c[i];
        }
    } else {
        mpz_class bpow = b;
        for (std::size_t i = c.size() - 1; i-- > 0;) {
            acc *= a;
            mpz_addmul(acc.get_mpz_t(), c[i].get_mpz_t(), bpow.get_mpz_t());
            bpow *= b;
        }
    }
    return sgn(acc);
}

inline int sign_at(const IntPolynomial& p, const mpq_class& x) { return sign_at(p.coeffs(), x); }

/// Exact value of an integer polynomial at a rational point.
inline mpq_class evaluate(const IntPolynomial& p, const mpq_class& x) {
    if (p.is_zero()) return 0;
    const auto& c = p.coeffs();
    const mpz_class& a = x.get_num();
    const mpz_class& b = x.get_den();
    mpz_class acc = c.back();
    mpz_class bpow = 1;
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        bpow *= b;
        acc *= a;
        mpz_addmul(acc.get_mpz_t(), c[i].get_mpz_t(), bpow.get_mpz_t());
    }
    mpq_class r(acc, bpow);
    r.canonicalize();
    return r;
}

inline mpq_class evaluate(const RatPolynomial& p, const mpq_class& x) { return p(x); }

inline mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline mpz_class floor_of(const mpq_class& x) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

inline mpz_class ceil_of(const mpq_class& x) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

/// Parses a decimal integer string, throwing std::invalid_argument on malformed input.
inline mpz_class parse_integer(const std::string& s) {
    mpz_class r;
    if (s.empty() || r.set_str(s, 10) != 0) throw std::invalid_argument("not a decimal integer: '" + s + "'");
    return r;
}

/// Parses "a" or "a/b".
inline mpq_class parse_rational(const std::string& s) {
    mpq_class r;
    if (s.empty() || r.set_str(s, 10) != 0 || r.get_den() == 0)
        throw std::invalid_argument("not a rational number: '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace weilsearch

#endif  // WEILSEARCH_POLYNOMIAL_HPP
