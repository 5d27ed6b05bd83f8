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

#ifndef POLYCS_STATES_HPP
#define POLYCS_STATES_HPP

#include <complex>

#include "polycs/conjugate.hpp"
#include "polycs/repspace.hpp"

namespace polycs {

enum class Family { Annihilation, Exponential, Displacement };

/// Coherent state over a module basis. Coefficients are stored up to the
/// working cutoff; the phase convention makes c_0 real positive after
/// normalization. For non-normalizable members (exponential family on
/// algebras of order >= 2, displacement with a non-anti-Hermitian generator)
/// the raw truncated vector is returned with normalizable = false and
/// norm_sq reporting the cutoff-dependent partial sum.
struct CoherentState {
    Family family;
    std::complex<double> parameter;
    std::vector<std::complex<double>> coeffs;
    double norm_sq = 0.0;
    double tail_bound = 0.0;
    bool normalizable = false;
    std::uint64_t module_id = 0;
};

/// Eigenstate of N- with eigenvalue alpha: c_n = alpha^n / sqrt(prod s[k]).
/// The cutoff grows geometrically until the geometric tail estimate certifies
/// tail mass < tol. Throws PoleOnSpectrum for finite modules and
/// CutoffExceeded when certification fails at max_cutoff.
CoherentState annihilation_cs(const LoweringModule& mod, std::complex<double> alpha,
                              double tol = 1e-14, int max_cutoff = 20000);

/// The same series on an explicitly finite module (all terms up to
/// termination); used for realization cross-checks where the eigenvalue
/// property is not claimed.
CoherentState annihilation_series(const LoweringModule& mod, std::complex<double> alpha);

/// exp(gamma N+)|0>: c_n = gamma^n / n! * sqrt(prod s[k]). Normalizability by
/// the degree rule: deg f = 1 requires |gamma| < 1; deg f >= 2 diverges for
/// any gamma != 0 and the state is returned unnormalized.
CoherentState exponential_cs(const LoweringModule& mod, std::complex<double> gamma,
                             double tol = 1e-14, int max_cutoff = 20000);

/// exp(eta N+ - conj(eta) N-bar)|0> on a cutoff-D module, by the scaled Taylor
/// action of the banded generator. Unitary (and normalized) exactly when the
/// generator is anti-Hermitian, which requires N-bar = N+^T.
CoherentState displacement_cs(const LoweringModule& mod, const UndeformedMapSpec& map,
                              std::complex<double> eta, int cutoff);

/// <x|y>, conjugate-linear in x. Throws ModuleMismatch across modules.
std::complex<double> overlap(const CoherentState& x, const CoherentState& y);

/// |<x|y>|^2 for normalized inputs; normalizes on the fly otherwise.
double fidelity(const CoherentState& x, const CoherentState& y);

struct NormResult {
    double norm_sq = 0.0;
    bool gamma_form = false;  // true when evaluated through the pFq closed form
};

/// Squared norm of the unnormalized annihilation series via the generalized
/// hypergeometric closed form when the ladder polynomial splits into rational
/// linear factors; falls back to direct coefficient summation otherwise.
NormResult norm_hypergeometric(const LoweringModule& mod, std::complex<double> alpha);

// serialization
std::string state_to_json(const CoherentState& st);
std::string state_to_csv(const CoherentState& st);  // level, |c_n|^2

}  // namespace polycs

#endif
