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

#ifndef POLYCS_POLYNOMIAL_HPP
#define POLYCS_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "polycs/rational.hpp"

namespace polycs {

/// Dense univariate polynomial with exact rational coefficients,
/// lowest degree first, trailing zeros trimmed.
class RationalPoly {
   public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs);

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coeff(int k) const;

    Rational eval(const Rational& x) const;  // Horner
    double eval_double(double x) const;

    RationalPoly operator+(const RationalPoly& o) const;
    RationalPoly operator-(const RationalPoly& o) const;
    RationalPoly operator*(const RationalPoly& o) const;
    RationalPoly scaled(const Rational& c) const;
    bool operator==(const RationalPoly& o) const { return coeffs_ == o.coeffs_; }

    /// p(x + c), exact Taylor shift.
    RationalPoly shifted(const Rational& c) const;
    /// p(x) - p(x - 1).
    RationalPoly backward_difference() const;

    /// Divide by (x - root); remainder must be zero.
    RationalPoly deflate(const Rational& root) const;

    std::string str(const std::string& var = "x") const;

   private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Unique polynomial of degree <= points-1 through (x_i, y_i); the x_i must be
/// distinct. Newton divided differences in exact arithmetic.
RationalPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/// Lowest-degree polynomial of degree <= max_degree through ALL points,
/// obtained from a small spread subset and then verified exactly everywhere
/// (interpolating through hundreds of points directly would blow up the
/// exact coefficients). With require_confirmation the fit must leave at least
/// one redundant point. Returns nullopt when no such polynomial exists.
std::optional<RationalPoly> exact_polynomial_fit(const std::vector<Rational>& xs,
                                                 const std::vector<Rational>& ys, int max_degree,
                                                 bool require_confirmation);

/// All rational roots with multiplicity, found by reconstructing float root
/// candidates and verifying them exactly; returns nullopt when the polynomial
/// does not split into rational linear factors.
std::optional<std::vector<std::pair<Rational, int>>> rational_roots(const RationalPoly& p);

}  // namespace polycs

#endif
