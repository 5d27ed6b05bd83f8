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

#ifndef POLYCS_MEASURES_HPP
#define POLYCS_MEASURES_HPP

#include <functional>

#include "polycs/repspace.hpp"

namespace polycs {

// Resolution-of-identity bookkeeping: a radial density sigma(r) resolves the
// identity over the annihilation family exactly when its moments satisfy
// 2 pi int_0^inf sigma(r) r^(2n+1) dr  proportional to  rho_n = prod_k s[k].

/// rho_n = prod_{k<=n} s[k]; exact rationals while they fit in 128 bits,
/// log-space doubles throughout.
struct MomentSequence {
    std::vector<double> values;      // rho_n as doubles (inf on overflow)
    std::vector<double> log_values;  // log rho_n, always finite
    std::vector<Rational> exact;     // exact prefix (may be shorter than values)
    std::uint64_t module_id = 0;
};

MomentSequence moment_sequence(const LoweringModule& mod, int n_max);

/// Bessel-K radial density ansatz r^(-2 phi + 1) K_(1/2 + phi)(2r) for the
/// weight-(-phi) module, phi < 0.
double bg_density(double r, const Rational& phi);

/// Radial density whose even moments are exactly the ladder products of the
/// weight-(-phi) module with s[m] = m(m - 1 - 2 phi):
///   sigma(r) = r^(-2 phi - 1) K_(-2 phi - 1)(2r),
///   2 pi int sigma r^(2n+1) dr = (pi / 2) Gamma(n+1) Gamma(n - 2 phi).
double bg_moment_density(double r, const Rational& phi);

/// Quadrature check of a candidate density against a moment sequence:
/// returns max_n of the relative error between quad_n/quad_0 and rho_n/rho_0.
double verify_moments(const std::function<double(double)>& density, const MomentSequence& moments,
                      int n_max, double quad_tol = 1e-10);

/// CSV: n, exact ratio (or empty), float value, quadrature value, rel. error.
std::string moments_to_csv(const MomentSequence& m,
                           const std::vector<double>* quadrature = nullptr);

}  // namespace polycs

#endif
