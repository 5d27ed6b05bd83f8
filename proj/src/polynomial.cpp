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

#include "polycs/polynomial.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>

#include "polycs/errors.hpp"

namespace polycs {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void RationalPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational RationalPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational RationalPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double RationalPoly::eval_double(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_double();
    return acc;
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const {
    return *this + o.scaled(Rational(-1));
}

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::scaled(const Rational& c) const {
    std::vector<Rational> r = coeffs_;
    for (auto& v : r) v *= c;
    return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::shifted(const Rational& c) const {
    // in-place Taylor shift by repeated synthetic division
    std::vector<Rational> a = coeffs_;
    const int d = static_cast<int>(a.size());
    for (int k = 0; k < d; ++k) {
        for (int i = d - 2; i >= k; --i) {
            a[static_cast<std::size_t>(i)] += c * a[static_cast<std::size_t>(i + 1)];
        }
    }
    return RationalPoly(std::move(a));
}

RationalPoly RationalPoly::backward_difference() const {
    return *this - shifted(Rational(-1));
}

RationalPoly RationalPoly::deflate(const Rational& root) const {
    if (is_zero()) throw Error("deflating zero polynomial");
    const int d = degree();
    std::vector<Rational> q(static_cast<std::size_t>(d), Rational(0));
    // synthetic division by (x - root)
    Rational acc(0);
    for (int i = d; i >= 1; --i) {
        acc = coeffs_[static_cast<std::size_t>(i)] + acc * root;
        q[static_cast<std::size_t>(i - 1)] = acc;
    }
    Rational rem = coeffs_[0] + acc * root;
    if (!rem.is_zero()) throw Error("deflate: remainder nonzero, not a root");
    return RationalPoly(std::move(q));
}

std::string RationalPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        std::string term;
        if (k == 0) {
            term = c.str();
        } else {
            std::string xs = (k == 1) ? var : var + "^" + std::to_string(k);
            if (c == Rational(1))
                term = xs;
            else if (c == Rational(-1))
                term = "-" + xs;
            else
                term = c.str() + "*" + xs;
        }
        if (out.empty()) {
            out = term;
        } else if (!term.empty() && term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

RationalPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    if (xs.size() != ys.size() || xs.empty()) throw Error("interpolate: bad point set");
    const std::size_t n = xs.size();
    // divided differences
    std::vector<Rational> dd = ys;
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            Rational dx = xs[i] - xs[i - level];
            if (dx.is_zero()) throw Error("interpolate: duplicate abscissa");
            dd[i] = (dd[i] - dd[i - 1]) / dx;
            if (i == level) break;
        }
    }
    // assemble Newton form
    RationalPoly result(std::vector<Rational>{dd[0]});
    RationalPoly basis(std::vector<Rational>{Rational(1)});
    for (std::size_t i = 1; i < n; ++i) {
        basis = basis * RationalPoly(std::vector<Rational>{-xs[i - 1], Rational(1)});
        result = result + basis.scaled(dd[i]);
    }
    return result;
}

std::optional<RationalPoly> exact_polynomial_fit(const std::vector<Rational>& xs,
                                                 const std::vector<Rational>& ys, int max_degree,
                                                 bool require_confirmation) {
    const int n = static_cast<int>(xs.size());
    if (n == 0 || xs.size() != ys.size()) return std::nullopt;
    int d_cap = std::min(max_degree, require_confirmation ? n - 2 : n - 1);
    if (d_cap < 0) return std::nullopt;
    // spread subset of d_cap + 1 sample points
    std::vector<Rational> sx, sy;
    for (int i = 0; i <= d_cap; ++i) {
        int idx = d_cap == 0 ? 0 : static_cast<int>((static_cast<long long>(i) * (n - 1)) / d_cap);
        sx.push_back(xs[static_cast<std::size_t>(idx)]);
        sy.push_back(ys[static_cast<std::size_t>(idx)]);
    }
    RationalPoly p;
    try {
        p = interpolate(sx, sy);
    } catch (const RationalOverflow&) {
        return std::nullopt;
    }
    try {
        for (int i = 0; i < n; ++i)
            if (p.eval(xs[static_cast<std::size_t>(i)]) != ys[static_cast<std::size_t>(i)])
                return std::nullopt;
    } catch (const RationalOverflow&) {
        return std::nullopt;
    }
    return p;
}

namespace {

// all complex roots by Durand-Kerner, double precision; used only to seed
// exact rational reconstruction
std::vector<std::complex<double>> numeric_roots(const RationalPoly& p) {
    const int d = p.degree();
    std::vector<std::complex<double>> c(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) c[static_cast<std::size_t>(i)] = p.coeff(i).to_double();
    for (auto& v : c) v /= c.back();
    std::vector<std::complex<double>> r(static_cast<std::size_t>(d));
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> acc(1.0, 0.0);
    for (int i = 0; i < d; ++i) {
        acc *= seed;
        r[static_cast<std::size_t>(i)] = acc;
    }
    for (int iter = 0; iter < 600; ++iter) {
        double moved = 0.0;
        for (int i = 0; i < d; ++i) {
            std::complex<double> num(0.0, 0.0);
            for (int k = d; k >= 0; --k) num = num * r[static_cast<std::size_t>(i)] + c[static_cast<std::size_t>(k)];
            std::complex<double> den(1.0, 0.0);
            for (int j = 0; j < d; ++j)
                if (j != i) den *= (r[static_cast<std::size_t>(i)] - r[static_cast<std::size_t>(j)]);
            if (std::abs(den) < 1e-300) continue;
            std::complex<double> delta = num / den;
            r[static_cast<std::size_t>(i)] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-14) break;
    }
    return r;
}

// Small-denominator rational near v, verified exactly by the caller. Repeated
// roots push the numeric root estimates off by eps^(1/multiplicity), so the
// match window is generous and exact evaluation is the real filter.
std::vector<Rational> nearby_rationals(double v, long long qmax, double window) {
    std::vector<Rational> out;
    for (long long q = 1; q <= qmax; ++q) {
        double pd = std::round(v * static_cast<double>(q));
        if (std::abs(pd) > 9e17) break;
        long long pn = static_cast<long long>(pd);
        if (std::abs(v - static_cast<double>(pn) / static_cast<double>(q)) > window) continue;
        Rational cand(pn, q);
        bool dup = false;
        for (const auto& r : out) dup = dup || r == cand;
        if (!dup) out.push_back(cand);
    }
    return out;
}

}  // namespace

std::optional<std::vector<std::pair<Rational, int>>> rational_roots(const RationalPoly& p) {
    if (p.is_zero()) return std::nullopt;
    if (p.degree() == 0) return std::vector<std::pair<Rational, int>>{};
    std::vector<std::pair<Rational, int>> out;
    RationalPoly cur = p;
    while (cur.degree() >= 1) {
        auto numeric = numeric_roots(cur);
        bool found = false;
        for (const auto& z : numeric) {
            if (std::abs(z.imag()) > 2e-4 * (1.0 + std::abs(z.real()))) continue;
            for (const Rational& cand : nearby_rationals(z.real(), 720, 2e-4)) {
                if (!cur.eval(cand).is_zero()) continue;
                int mult = 0;
                while (cur.degree() >= 1 && cur.eval(cand).is_zero()) {
                    cur = cur.deflate(cand);
                    ++mult;
                }
                bool merged = false;
                for (auto& [root, m] : out) {
                    if (root == cand) {
                        m += mult;
                        merged = true;
                        break;
                    }
                }
                if (!merged) out.emplace_back(cand, mult);
                found = true;
                break;
            }
            if (found) break;
        }
        if (!found) return std::nullopt;
    }
    return out;
}

}  // namespace polycs
