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

#ifndef POLYCS_REALIZE_HPP
#define POLYCS_REALIZE_HPP

#include <map>
#include <string>
#include <vector>

#include "polycs/repspace.hpp"

namespace polycs {

// Multimode Fock-space realizations of the deformed generators, kept exact:
// each generator is a monomial in mode operators, so it sends a basis state to
// at most one basis state and the squared amplitude is an exact rational.
// These sectors are the brute-force oracle the abstract modules are checked
// against.

/// Occupation-number basis restricted to fixed conserved charges. The last
/// tuple component is a collective-spin projection index for Dicke systems.
struct FockSector {
    std::vector<std::vector<int>> basis;           // occupation tuples
    std::vector<int> mode_cutoffs;
    std::map<std::string, Rational> charges;       // declared conserved charges
    std::map<std::vector<int>, int> index;         // tuple -> basis position

    int size() const { return static_cast<int>(basis.size()); }
};

/// One monomial ladder operator on a sector. For basis state i:
/// target[i] is the image state (-1 when the state is annihilated or the
/// image leaves the cutoff box), sqamp[i] the exact squared amplitude of the
/// image, truncated[i] marks a nonzero amplitude whose image fell outside the
/// box (those rows are excluded from interior fits).
struct MonomialOp {
    std::vector<int> target;
    std::vector<Rational> sqamp;
    std::vector<bool> truncated;
};

struct RealizedTriple {
    FockSector sector;
    std::vector<Rational> n0;  // N0 eigenvalue per basis state
    MonomialOp plus, minus;
    std::string recipe;
};

/// Single-oscillator su(1,1): K- = a^2/2, K+ = a+^2/2, K0 = (a a+ + a+ a)/4,
/// on the full oscillator space (even and odd sectors interleaved).
RealizedTriple realize_su11_single(int cutoff);

/// Two-mode pair realization K+ = a+ b+, K- = ab, K0 = (na + nb + 1)/2 on the
/// full box; q = na - nb labels the invariant sectors.
RealizedTriple realize_pair(const std::vector<int>& cutoffs);

/// Trilinear J+ = a+ b c, J- = a b+ c+, J0 = (na - (nb + nc + 1)/2)/2 on the
/// (h0, q) sector, h0 = (na + (nb + nc + 1)/2)/2 and q = nb - nc.
RealizedTriple realize_trilinear(const std::vector<int>& cutoffs, const Rational& h0,
                                 long long q);

/// Multiphoton N+ = a0^m (a1+)^n, N0 = (n1 - n0)/(m+n), restricted to the
/// sector of the conserved charge h0 = (w0 n0 + w1 n1)/(m+n) with
/// (w0, w1) = (n, m)/gcd(m, n); for m = n this is (n0 + n1)/(m + n).
RealizedTriple realize_multiphoton(int m, int n, const std::vector<int>& cutoffs,
                                   const Rational& h0);

/// n-photon Dicke system in the maximal collective multiplet j = n_atoms/2:
/// N- = J-_spin (a+)^k, N0 = sum_i sigma0(i), sector h0 = k m + n_photons.
RealizedTriple realize_dicke(int n_atoms, int flip_order, int cutoff, const Rational& h0);

/// All non-empty h0 charges of realize_dicke within the cutoff.
std::vector<Rational> dicke_sector_charges(int n_atoms, int flip_order, int cutoff);

/// Exact diagonal of [N+, N-] for basis state i, from the exact squared
/// amplitudes (valid on every state, including box-boundary ones).
Rational commutator_diagonal(const RealizedTriple& t, int i);

/// Interior states: rows where neither generator image leaves the box.
std::vector<int> interior_states(const RealizedTriple& t);

/// Exact polynomial f with [N+, N-] = f(N0) on the sector, fitted through the
/// interior states by Newton interpolation. Throws NotDiagonal when raise and
/// lower do not return to the same state (corrupted adjoint structure) and
/// NoPolynomialFit when no polynomial of degree <= max_degree matches.
StructurePolynomial closure_fit(const RealizedTriple& t, int max_degree = 8);

/// Basis states exactly annihilated by the lowering generator.
std::vector<int> find_vacua(const RealizedTriple& t);

/// Lowest-weight module read off the N+ orbit of a vacuum state; exact ladder
/// and, when the closure fit succeeds, the Casimir data as well.
LoweringModule sector_to_module(const RealizedTriple& t, int vacuum_index);

// export
std::string sector_to_json(const RealizedTriple& t);
std::string sparse_to_csv(const RealizedTriple& t, bool plus_part);

}  // namespace polycs

#endif
