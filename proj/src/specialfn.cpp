/*
   Copyright 2026 The polycs authors

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

#include "polycs/specialfn.hpp"

#include <cmath>
#include <limits>

#include "polycs/errors.hpp"

namespace polycs {

namespace {

constexpr long double kPi = 3.14159265358979323846264338327950288L;

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

// Stirling series for log Gamma, valid for large arguments. Coefficients are
// B_{2n} / (2n (2n-1)).
long double stirling_log_gamma(long double x) {
    static const long double c[] = {
        1.0L / 12.0L,        -1.0L / 360.0L,      1.0L / 1260.0L,   -1.0L / 1680.0L,
        1.0L / 1188.0L,      -691.0L / 360360.0L, 1.0L / 156.0L,    -3617.0L / 122400.0L,
    };
    long double inv = 1.0L / x;
    long double inv2 = inv * inv;
    long double series = 0.0L, p = inv;
    for (long double ck : c) {
        series += ck * p;
        p *= inv2;
    }
    return (x - 0.5L) * logl(x) - x + 0.5L * logl(2.0L * kPi) + series;
}

long double log_gamma_positive(long double x) {
    long double shift = 0.0L;
    while (x < 12.0L) {
        shift += logl(x);
        x += 1.0L;
    }
    return stirling_log_gamma(x) - shift;
}

}  // namespace

double log_gamma(double x) {
    if (is_nonpositive_integer(x))
        throw PoleAtNonpositiveInteger("log_gamma pole at x = " + std::to_string(x));
    if (x > 0.0) return static_cast<double>(log_gamma_positive(x));
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    long double lx = x;
    long double s = sinl(kPi * (lx - floorl(lx)));  // |sin(pi x)| by periodicity
    return static_cast<double>(logl(kPi / fabsl(s)) - log_gamma_positive(1.0L - lx));
}

SignedLogGamma log_gamma_signed(double x) {
    if (is_nonpositive_integer(x))
        throw PoleAtNonpositiveInteger("log_gamma pole at x = " + std::to_string(x));
    if (x > 0.0) return {log_gamma(x), 1};
    // Gamma alternates sign between consecutive negative integers:
    // positive on (-2,-1), (-4,-3), ...; negative on (-1,0), (-3,-2), ...
    double fl = std::floor(x);
    long long k = static_cast<long long>(-fl);  // x in (-k, -k+1)
    int sign = (k % 2 == 0) ? 1 : -1;
    return {log_gamma(x), sign};
}

double bessel_k(double nu, double x) {
    if (!(x > 0.0)) throw DomainViolation("bessel_k requires x > 0");
    if (std::abs(nu) > 10.0) throw DomainViolation("bessel_k requires |nu| <= 10");
    const long double v = fabsl(static_cast<long double>(nu));  // K is even in nu
    const long double lx = static_cast<long double>(x);

    // integrand exp(-x cosh t) cosh(v t); locate the scale of its peak
    auto log_integrand = [&](long double t) {
        long double vt = v * t;
        long double c = vt < 30.0L ? logl(coshl(vt)) : vt - logl(2.0L) + log1pl(expl(-2.0L * vt));
        return -lx * coshl(t) + c;
    };
    long double peak_log = -lx;
    long double T = 2.0L;
    for (long double t = 0.0L; t < 40.0L; t += 0.25L) {
        long double g = log_integrand(t);
        if (g > peak_log) peak_log = g;
        if (g < peak_log - 64.0L) {
            T = t;
            break;
        }
        T = t + 0.25L;
    }

    long double prev = std::numeric_limits<long double>::quiet_NaN();
    long double h = 0.5L;
    long double result = 0.0L;
    for (int level = 0; level < 9; ++level, h *= 0.5L) {
        long double sum = 0.5L * expl(-lx);  // t = 0 endpoint, cosh(0) = 1
        long long n = static_cast<long long>(T / h) + 1;
        for (long long i = 1; i <= n; ++i) {
            long double g = log_integrand(i * h);
            if (g > peak_log - 80.0L) sum += expl(g);
        }
        result = sum * h;
        if (!std::isnan(static_cast<double>(prev)) &&
            fabsl(result - prev) <= 1e-13L * fabsl(result))
            break;
        prev = result;
    }
    return static_cast<double>(result);
}

SeriesResult pfq(const std::vector<double>& a, const std::vector<double>& b,
                 std::complex<double> z, double tol) {
    if (a.size() > b.size())
        throw DomainViolation("pfq: p > q series has zero radius of convergence");
    for (double bj : b) {
        if (is_nonpositive_integer(bj))
            throw BParameterPole("pfq: lower parameter " + std::to_string(bj) +
                                 " is a non-positive integer");
    }
    SeriesResult res;
    std::complex<double> term(1.0, 0.0);
    std::complex<double> sum(1.0, 0.0);
    const int max_terms = 100000;
    int n = 0;
    for (; n < max_terms; ++n) {
        std::complex<double> factor = z / static_cast<double>(n + 1);
        for (double ai : a) factor *= (ai + n);
        for (double bj : b) factor /= (bj + n);
        term *= factor;
        sum += term;
        double ratio = (std::abs(sum) > 0.0) ? std::abs(term) / std::abs(sum) : 1.0;
        // geometric tail once successive term ratio is below 1/2
        if (ratio < tol) {
            std::complex<double> next = term * z / static_cast<double>(n + 2);
            double r = std::abs(next) / std::max(std::abs(term), 1e-300);
            if (r < 0.5) {
                res.bound = std::abs(next) / (1.0 - r);
                res.converged = res.bound <= tol * std::max(1.0, std::abs(sum));
                if (res.converged) {
                    ++n;
                    break;
                }
            }
        }
    }
    res.value = sum;
    res.terms_used = n;
    return res;
}

double quad_semi_infinite(const std::function<double(double)>& fn, double tol) {
    // exp-sinh: r = exp((pi/2) sinh t), dr = (pi/2) cosh t r dt
    auto node = [](double t, double& r, double& w) {
        double s = std::sinh(t);
        r = std::exp(1.5707963267948966 * s);
        w = 1.5707963267948966 * std::cosh(t) * r;
    };
    auto sample = [&](double t) -> double {
        double r, w;
        node(t, r, w);
        if (r <= 0.0 || !std::isfinite(r) || !std::isfinite(w)) return 0.0;
        double v = fn(r);
        if (!std::isfinite(v)) throw QuadratureNotConverged("integrand not finite at r = " + std::to_string(r));
        return v * w;
    };

    const double tmax = 4.3;  // r spans roughly [1e-25, 1e25]
    double prev = std::numeric_limits<double>::quiet_NaN();
    double result = 0.0;
    double h = 0.5;
    for (int level = 0; level < 8; ++level, h *= 0.5) {
        double sum = sample(0.0);
        for (double t = h; t <= tmax; t += h) {
            sum += sample(t);
            sum += sample(-t);
        }
        result = sum * h;
        if (level > 1 && std::abs(result - prev) <= tol * std::max(1.0, std::abs(result)))
            return result;
        prev = result;
    }
    throw QuadratureNotConverged("quad_semi_infinite: refinement did not stabilize");
}

}  // namespace polycs
