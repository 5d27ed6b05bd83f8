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

#ifndef POLYCS_CONJUGATE_HPP
#define POLYCS_CONJUGATE_HPP

#include "polycs/repspace.hpp"

namespace polycs {

// The canonical conjugate of the lowering operator is ~N+ = N+ F(C, N0) with
// F = (N0 + delta) / (C - g(N0)); [N-, ~N+] = 1 holds on the whole module
// once delta is fixed by the vacuum condition (N0 + delta)|vac> = |vac>.
// Its exponential applied to the vacuum generates the annihilation-operator
// eigenstates. Finite modules have no canonical conjugate: F has a pole on
// the top level.

/// delta = 1 - w0 (one value per vacuum).
Rational delta_for_vacuum(const Rational& w0);

struct ConjugateSpec {
    Rational delta;
    std::vector<double> F_diag;    // F at levels 0..dim-2
    std::vector<int> pole_levels;  // levels where C - g(N0) = 0
};

ConjugateSpec conjugate_spec(const LoweringModule& mod, const Rational& delta);

/// ~N+ as a matrix: subdiagonal entries (w0 + m + delta)/sqrt(s[m+1]).
/// Throws PoleOnSpectrum on finite modules.
Matrix conjugate_raising(const LoweringModule& mod, const Rational& delta);

/// Numerical kernel of the adjoint of ~N+ (states annihilated by ~N+^dagger);
/// for a lowest-weight module this is the vacuum itself.
std::vector<std::vector<double>> dual_vacua(const LoweringModule& mod, const Rational& delta,
                                            double tol = 1e-9);
std::vector<std::vector<double>> dual_vacua_of(const Matrix& conjugate_plus, double tol = 1e-9);

/// Deformed -> undeformed mapping N-bar = N- G(C, N0) with
/// G = (b (N0^2 - N0) + eps) / (C - g(N0 - 1)); then [N+, N-bar] = -2b N0.
/// b = +1 targets su(1,1), b = -1 targets su(2); eps is a free constant.
struct UndeformedMapSpec {
    int b_sign = 1;
    Rational epsilon_const;
    std::vector<double> G_diag;  // G at levels 1..dim-1
};

UndeformedMapSpec undeformed_spec(const LoweringModule& mod, int b_sign, const Rational& eps);
Matrix undeformed_map(const LoweringModule& mod, int b_sign, const Rational& eps);

/// max-norm residual of [N+, N-bar] + 2b N0 over levels 1..dim-2 (vacuum and
/// top level excluded; the identity holds there only for tuned eps).
double mapped_commutator_residual(const LoweringModule& mod, const Matrix& nbar_minus, int b_sign);

std::string conjugate_spec_to_json(const ConjugateSpec& spec);

}  // namespace polycs

#endif
