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

#ifndef POLYCS_SPECIALFN_HPP
#define POLYCS_SPECIALFN_HPP

#include <complex>
#include <functional>
#include <vector>

namespace polycs {

// Self-contained numeric kernel. Everything the library needs from special
// function land lives here, with stated accuracy targets, so results do not
// depend on which libm happens to be installed.

/// log Gamma(x) for x > 0. Stirling series with upward recursion below x = 12.
/// Relative accuracy <= 1e-13 on [1e-3, 1e4]. Throws PoleAtNonpositiveInteger
/// on 0, -1, -2, ... and handles negative non-integers by reflection.
double log_gamma(double x);

/// log |Gamma(x)| together with the sign of Gamma(x).
struct SignedLogGamma {
    double log_abs;
    int sign;
};
SignedLogGamma log_gamma_signed(double x);

/// Modified Bessel K_nu(x) for x > 0, |nu| <= 10, via the cosh integral
/// representation with step-halving trapezoid sums in extended precision.
/// Relative accuracy <= 1e-10 on x in [1e-3, 50] (usually much better).
double bessel_k(double nu, double x);

struct SeriesResult {
    std::complex<double> value;
    int terms_used = 0;
    bool converged = false;
    double bound = 0.0;  // last-term tail bound
};

/// Generalized hypergeometric pFq(a; b; z) by term recurrence, p <= q so the
/// series is entire. The tail bound is the geometric estimate once the term
/// ratio drops below 1/2.
SeriesResult pfq(const std::vector<double>& a, const std::vector<double>& b,
                 std::complex<double> z, double tol = 1e-15);

/// Integral of fn over (0, inf) by exp-sinh double-exponential trapezoid with
/// successive step halving; agreement of refinements within
/// tol * max(1, |I|) certifies the result. Throws QuadratureNotConverged.
double quad_semi_infinite(const std::function<double(double)>& fn, double tol = 1e-10);

}  // namespace polycs

#endif
