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

#include "polycs/algebra.hpp"

#include <json.hpp>

#include "polycs/errors.hpp"

namespace polycs {

namespace {

// binomial coefficients as rationals, small n
Rational binom(int n, int k) {
    Rational r(1);
    for (int i = 0; i < k; ++i) r = r * Rational(n - i) / Rational(i + 1);
    return r;
}

}  // namespace

CasimirPolynomial telescope_g(const StructurePolynomial& f, int max_degree) {
    const int d = f.degree();
    if (d > max_degree)
        throw DegreeLimitExceeded("telescope_g: deg f = " + std::to_string(d) +
                                  " exceeds limit " + std::to_string(max_degree));
    if (d < 0) return CasimirPolynomial{};

    // g(x) = sum_{j=1}^{d+1} b_j x^j (no constant term, so g(0) = 0).
    // x^j - (x-1)^j contributes binom(j,i) (-1)^(j-i+1) to the x^i coefficient,
    // which makes the system triangular from the top.
    std::vector<Rational> b(static_cast<std::size_t>(d) + 2, Rational(0));
    for (int i = d; i >= 0; --i) {
        Rational rhs = f.p.coeff(i);
        for (int j = i + 2; j <= d + 1; ++j) {
            Rational term = b[static_cast<std::size_t>(j)] * binom(j, i);
            if ((j - i + 1) % 2 != 0) term = -term;
            rhs -= term;
        }
        // the j = i+1 contribution has coefficient binom(i+1, i) = i+1
        b[static_cast<std::size_t>(i) + 1] = rhs / Rational(i + 1);
    }
    return CasimirPolynomial{RationalPoly(std::move(b))};
}

Rational casimir_value(const CasimirPolynomial& g, const Rational& j) {
    return g.p.eval(j - Rational(1));
}

namespace presets {

StructurePolynomial su11_f() { return {RationalPoly({Rational(0), Rational(-2)})}; }

StructurePolynomial su2_f() { return {RationalPoly({Rational(0), Rational(2)})}; }

StructurePolynomial quadratic_f(const Rational& a, const Rational& b, const Rational& c) {
    return {RationalPoly({c, Rational(2) * b, a})};
}

StructurePolynomial higgs_f(const Rational& c, const Rational& h) {
    return {RationalPoly({Rational(0), Rational(2) * c, Rational(0), Rational(4) * h})};
}

StructurePolynomial trilinear_f(const Rational& h0, const Rational& q) {
    Rational c0 = h0 * (h0 + Rational(1)) - (Rational(1) - q * q) / Rational(4);
    Rational c1 = Rational(2) * h0 - Rational(1);
    return {RationalPoly({c0, c1, Rational(-3)})};
}

}  // namespace presets

std::string poly_to_json(const RationalPoly& p) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : p.coeffs()) j.push_back(c.str());
    return j.dump();
}

RationalPoly poly_from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    if (!j.is_array()) throw ParseError("polynomial JSON must be an array of rational strings");
    std::vector<Rational> coeffs;
    for (const auto& item : j) {
        if (!item.is_string()) throw ParseError("polynomial JSON entries must be strings");
        coeffs.push_back(Rational::parse(item.get<std::string>()));
    }
    return RationalPoly(std::move(coeffs));
}

}  // namespace polycs
