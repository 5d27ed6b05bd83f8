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

#ifndef POLYCS_REPSPACE_HPP
#define POLYCS_REPSPACE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polycs/algebra.hpp"
#include "polycs/linalg.hpp"

namespace polycs {

/// Lowest-weight module: vacuum weight w0 (the N0 eigenvalue of the vacuum),
/// Casimir C = g(w0 - 1), and exact squared ladder coefficients
/// s[m] = C - g(w0 + m - 1) with s[0] = 0.
///
/// If s hits an exact zero at m = t the module is finite with dimension t
/// (termination = t, s stored through index t). A negative s[m] before any
/// zero is a non-unitary weight choice and is rejected at construction.
struct LoweringModule {
    Rational w0;
    std::optional<Rational> casimir;
    std::vector<Rational> s;
    std::optional<int> termination;
    std::optional<CasimirPolynomial> gen;  // present when built from g; allows extension

    /// number of basis levels
    int dim() const { return termination ? *termination : static_cast<int>(s.size()); }
    bool finite() const { return termination.has_value(); }

    /// Same module, larger cutoff. Requires gen.
    LoweringModule extended(int new_cutoff) const;

    /// Structural fingerprint (w0 and leading ladder values); states carry it
    /// so that cross-module inner products are rejected.
    std::uint64_t fingerprint() const;
};

/// Exact polynomial s(x) with s(m) = s[m] on the stored levels; available
/// directly from gen or by exact interpolation with at least one redundant
/// confirming level.
RationalPoly ladder_polynomial(const LoweringModule& mod);

/// Rational zeros (with multiplicity) of the ladder polynomial. These are the
/// level positions where the lowering coefficient vanishes; a polynomial
/// algebra of order n has n + 1 of them, counted with multiplicity. Returns
/// nullopt when the polynomial does not split over the rationals.
std::optional<std::vector<std::pair<Rational, int>>> ladder_zero_positions(const LoweringModule& mod);

/// Matrix realization: n0 diagonal, nplus with sqrt(s[m]) at (m, m-1),
/// nminus its transpose.
struct OperatorTriple {
    int dim = 0;
    std::vector<Rational> n0_exact;
    std::vector<double> n0;
    Matrix nplus, nminus;
};

LoweringModule build_module(const CasimirPolynomial& g, const Rational& w0, int cutoff);
LoweringModule module_from_ladder(const std::vector<Rational>& s_table, const Rational& w0);

OperatorTriple ladder_matrices(const LoweringModule& mod);

/// max-norm of [N+, N-] - f(N0) over interior rows/cols 0..dim-2; the top
/// level is excluded because the band cut falsifies the identity there.
double commutator_residual(const OperatorTriple& t, const StructurePolynomial& f);

// JSON / CSV export
std::string module_to_json(const LoweringModule& mod);
LoweringModule module_from_json(const std::string& text);
std::string matrix_to_csv(const Matrix& m);

namespace presets {

/// g = -x(x+1) module with vacuum weight -phi (Barut-Girardello ladder
/// s[m] = m(m - 1 - 2 phi) in the normalization where [K+,K-] = -2 K0).
LoweringModule bg_module(const Rational& phi, int cutoff);
/// single-oscillator su(1,1) sectors: vacuum 0 -> w0 = 1/4, vacuum 1 -> w0 = 3/4
LoweringModule oscillator_su11_module(int which_vacuum, int cutoff);
/// su(2) with lowest weight -ell; terminates at dimension 2*ell + 1
LoweringModule su2_module(const Rational& ell, int cutoff);
/// quadratic-algebra module with ladder s[m] = m (m - 1/2 - eps)(m + 1/2 - eps)
/// on vacuum weight 0
LoweringModule quadratic_module(const Rational& eps, int cutoff);
/// Higgs-algebra module from f = 2cH + 4hH^3 on the given vacuum weight
LoweringModule higgs_module(const Rational& c, const Rational& h, const Rational& w0, int cutoff);

}  // namespace presets

}  // namespace polycs

#endif
