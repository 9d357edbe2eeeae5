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

#ifndef WEILSEARCH_NUMERIC_ROOTS_HPP
#define WEILSEARCH_NUMERIC_ROOTS_HPP

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "polynomial.hpp"

namespace weilsearch {

/**
 * Numeric approximations of the real parts of all roots of a polynomial,
 * sorted ascending, each presumed accurate to about 2^-precision. Nothing
 * downstream trusts these values; they only seed exactly-checked brackets.
 */
using RootApproximator = std::function<std::vector<mpq_class>(const IntPolynomial&, int precision)>;

namespace detail {

inline mpq_class long_double_to_rational(long double x) {
    if (x == 0.0L) return 0;
    int e = 0;
    long double f = std::frexp(x, &e);
    auto mant = static_cast<long>(std::ldexp(f, 62));
    mpq_class r(mant);
    const int shift = e - 62;
    if (shift >= 0)
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(shift));
    else
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-shift));
    return r;
}

/// Coefficients scaled by a common power of two into long double range.
inline std::vector<long double> scaled_coefficients(const IntPolynomial& p) {
    long emax = 0;
    bool first = true;
    std::vector<std::pair<double, long>> parts;
    for (const auto& c : p.coeffs()) {
        long e = 0;
        double d = mpz_get_d_2exp(&e, c.get_mpz_t());
        parts.emplace_back(d, e);
        if (c != 0 && (first || e > emax)) {
            emax = e;
            first = false;
        }
    }
    std::vector<long double> out;
    out.reserve(parts.size());
    for (auto [d, e] : parts) out.push_back(d == 0 ? 0.0L : std::ldexp(static_cast<long double>(d), static_cast<int>(e - emax)));
    return out;
}

/// Simultaneous Aberth iteration; a root is frozen once its correction is below `tol` relative.
inline std::vector<std::complex<long double>> aberth(const std::vector<long double>& c, long double tol) {
    using cplx = std::complex<long double>;
    const int m = static_cast<int>(c.size()) - 1;
    // root radius bound from the Fujiwara-type estimate
    long double radius = 0;
    for (int i = 0; i < m; ++i)
        radius = std::max(radius, std::pow(std::fabs(c[static_cast<std::size_t>(i)] / c.back()),
                                           1.0L / static_cast<long double>(m - i)));
    if (radius == 0) radius = 1;
    std::vector<cplx> z(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        long double ang = 2.0L * 3.14159265358979323846L * (k + 0.25L) / m + 0.4L;
        z[static_cast<std::size_t>(k)] = std::polar(radius, ang);
    }
    std::vector<bool> done(static_cast<std::size_t>(m), false);
    for (int iter = 0; iter < 400; ++iter) {
        bool all_done = true;
        for (int k = 0; k < m; ++k) {
            if (done[static_cast<std::size_t>(k)]) continue;
            cplx x = z[static_cast<std::size_t>(k)];
            cplx f = c.back(), df = 0;
            for (int i = m - 1; i >= 0; --i) {
                df = df * x + f;
                f = f * x + c[static_cast<std::size_t>(i)];
            }
            if (f == cplx(0)) {
                done[static_cast<std::size_t>(k)] = true;
                continue;
            }
            cplx ratio = f / df;
            cplx sum = 0;
            for (int j = 0; j < m; ++j)
                if (j != k) sum += 1.0L / (x - z[static_cast<std::size_t>(j)]);
            cplx w = ratio / (1.0L - ratio * sum);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = ratio;
            z[static_cast<std::size_t>(k)] = x - w;
            if (std::abs(w) <= tol * std::max(1.0L, std::abs(x)))
                done[static_cast<std::size_t>(k)] = true;
            else
                all_done = false;
        }
        if (all_done) break;
    }
    return z;
}

/// Real Newton polish in long double; keeps the input if a step does not reduce |f|.
inline long double polish_long_double(const std::vector<long double>& c, long double x) {
    auto eval = [&](long double t, long double& df) {
        long double f = c.back();
        df = 0;
        for (std::size_t i = c.size() - 1; i-- > 0;) {
            df = df * t + f;
            f = f * t + c[i];
        }
        return f;
    };
    long double df = 0;
    long double f = eval(x, df);
    for (int it = 0; it < 8 && f != 0 && df != 0; ++it) {
        long double nx = x - f / df;
        long double ndf = 0;
        long double nf = eval(nx, ndf);
        if (!(std::fabs(nf) < std::fabs(f))) break;
        x = nx;
        f = nf;
        df = ndf;
    }
    return x;
}

/// Real Newton polish with GMP floats at `bits` of precision.
inline mpq_class polish_multiprecision(const IntPolynomial& p, const mpq_class& start, unsigned long bits) {
    std::vector<mpf_class> c;
    c.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs()) c.emplace_back(a, bits);
    mpf_class x(start, bits), f(0, bits), df(0, bits), step(0, bits), nf(0, bits), ndf(0, bits), nx(0, bits);
    auto eval = [&](const mpf_class& t, mpf_class& val, mpf_class& der) {
        val = c.back();
        der = 0;
        for (std::size_t i = c.size() - 1; i-- > 0;) {
            der = der * t + val;
            val = val * t + c[i];
        }
    };
    eval(x, f, df);
    mpf_class tol(1, bits);
    mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), bits - 16);
    for (int it = 0; it < 200 && f != 0 && df != 0; ++it) {
        step = f / df;
        nx = x - step;
        eval(nx, nf, ndf);
        if (!(abs(nf) < abs(f))) break;
        x = nx;
        f = nf;
        df = ndf;
        if (abs(step) < tol) break;
    }
    mpq_class r;
    mpq_set_f(r.get_mpq_t(), x.get_mpf_t());
    return r;
}

}  // namespace detail

/// Default oracle: Aberth iteration in long double, Newton-polished in GMP floats above 48 bits.
inline std::vector<mpq_class> approximate_roots(const IntPolynomial& p, int precision) {
    const int m = p.degree();
    if (m < 1) return {};
    if (m == 1) {
        mpq_class r(-p.coeffs()[0], p.coeffs()[1]);
        r.canonicalize();
        return {r};
    }
    std::vector<long double> c = detail::scaled_coefficients(p);
    // long double carries 64 bits; past that the GMP polish below takes over
    const long double tol = std::max(std::ldexp(1.0L, -std::min(precision, 56) - 6), 16 * LDBL_EPSILON);
    std::vector<std::complex<long double>> z = detail::aberth(c, tol);
    std::vector<long double> xs;
    xs.reserve(z.size());
    for (const auto& w : z) xs.push_back(detail::polish_long_double(c, w.real()));
    std::sort(xs.begin(), xs.end());
    std::vector<mpq_class> out;
    out.reserve(xs.size());
    for (long double x : xs) out.push_back(detail::long_double_to_rational(x));
    if (precision > 48) {
        const auto bits = static_cast<unsigned long>(precision) + 64;
        for (auto& x : out) x = detail::polish_multiprecision(p, x, bits);
        std::sort(out.begin(), out.end());
    }
    return out;
}

}  // namespace weilsearch

#endif  // WEILSEARCH_NUMERIC_ROOTS_HPP
