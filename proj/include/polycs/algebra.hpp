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

#ifndef POLYCS_ALGEBRA_HPP
#define POLYCS_ALGEBRA_HPP

#include <string>

#include "polycs/polynomial.hpp"

namespace polycs {

// A polynomially deformed su(1,1)/su(2) algebra is fixed by the commutator
// polynomial f with [N+, N-] = f(N0), [N0, N±] = ±N±. Sector constants of a
// multimode realization are substituted into the coefficients beforehand, so
// f is always a plain rational polynomial here.

/// f(N0), the commutator polynomial.
struct StructurePolynomial {
    RationalPoly p;
    int degree() const { return p.degree(); }
    Rational eval(const Rational& x) const { return p.eval(x); }
};

/// g(N0) with g(H) - g(H-1) = f(H), normalized so that g(0) = 0.
/// Enters the Casimir as C = N- N+ + g(N0).
struct CasimirPolynomial {
    RationalPoly p;
    int degree() const { return p.degree(); }
    Rational eval(const Rational& x) const { return p.eval(x); }
};

/// Solve g(H) - g(H-1) = f(H) with g(0) = 0 by exact linear elimination on the
/// monomial basis. Unique; throws DegreeLimitExceeded above max_degree.
CasimirPolynomial telescope_g(const StructurePolynomial& f, int max_degree = 8);

/// Casimir value of the lowest-weight module labeled j: C(j) = g(j - 1).
Rational casimir_value(const CasimirPolynomial& g, const Rational& j);

// named algebras
namespace presets {

/// su(1,1): f = -2H.
StructurePolynomial su11_f();
/// su(2): f = +2H.
StructurePolynomial su2_f();
/// general quadratic: f = a H^2 + 2b H + c (the sign convention of the 2b term
/// is carried by the sign of b).
StructurePolynomial quadratic_f(const Rational& a, const Rational& b, const Rational& c);
/// Higgs / cubic: f = 2c H + 4h H^3.
StructurePolynomial higgs_f(const Rational& c, const Rational& h);
/// symmetry algebra of the trilinear boson system on the (h0, q) sector:
/// f = -3H^2 + (2h0 - 1)H + h0(h0 + 1) - (1 - q^2)/4.
StructurePolynomial trilinear_f(const Rational& h0, const Rational& q);

}  // namespace presets

// JSON wire format: array of "num/den" strings, lowest degree first.
std::string poly_to_json(const RationalPoly& p);
RationalPoly poly_from_json(const std::string& json_text);

}  // namespace polycs

#endif
