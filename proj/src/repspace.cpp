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

#include "polycs/repspace.hpp"

#include <cmath>
#include <json.hpp>

#include "polycs/errors.hpp"

namespace polycs {

LoweringModule build_module(const CasimirPolynomial& g, const Rational& w0, int cutoff) {
    if (cutoff < 2) throw Error("build_module: cutoff must be at least 2");
    LoweringModule mod;
    mod.w0 = w0;
    mod.gen = g;
    mod.casimir = casimir_value(g, w0);
    mod.s.push_back(Rational(0));
    for (int m = 1; m < cutoff; ++m) {
        Rational sm = *mod.casimir - g.eval(w0 + Rational(m - 1));
        if (sm.is_zero()) {
            mod.s.push_back(sm);
            mod.termination = m;
            return mod;
        }
        if (sm.sign() < 0)
            throw NonUnitaryError("build_module: s[" + std::to_string(m) + "] = " + sm.str() +
                                      " < 0, non-unitary weight choice",
                                  m);
        mod.s.push_back(sm);
    }
    return mod;
}

LoweringModule module_from_ladder(const std::vector<Rational>& s_table, const Rational& w0) {
    if (s_table.empty() || !s_table[0].is_zero())
        throw Error("module_from_ladder: table must start with s[0] = 0");
    LoweringModule mod;
    mod.w0 = w0;
    mod.s.push_back(Rational(0));
    for (std::size_t m = 1; m < s_table.size(); ++m) {
        const Rational& sm = s_table[m];
        if (sm.sign() < 0)
            throw NonUnitaryError("module_from_ladder: negative entry s[" + std::to_string(m) + "]",
                                  static_cast<int>(m));
        if (sm.is_zero()) {
            mod.s.push_back(sm);
            mod.termination = static_cast<int>(m);
            return mod;
        }
        mod.s.push_back(sm);
    }
    return mod;
}

LoweringModule LoweringModule::extended(int new_cutoff) const {
    if (finite() || new_cutoff <= static_cast<int>(s.size())) return *this;
    if (!gen) throw CutoffExceeded("module has no generating polynomial; cannot extend cutoff");
    return build_module(*gen, w0, new_cutoff);
}

std::uint64_t LoweringModule::fingerprint() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ w0.hash();
    const std::size_t upto = std::min<std::size_t>(s.size(), 16);
    for (std::size_t i = 1; i < upto; ++i) h = (h * 1099511628211ULL) ^ s[i].hash();
    return h;
}

RationalPoly ladder_polynomial(const LoweringModule& mod) {
    if (mod.gen) {
        // s(x) = C - g(w0 + x - 1)
        RationalPoly shifted = mod.gen->p.shifted(mod.w0 - Rational(1));
        return RationalPoly({*mod.casimir}) - shifted;
    }
    // exact fit over the stored levels, requiring at least one redundant
    // confirming point
    std::vector<Rational> xs, ys;
    for (std::size_t m = 0; m < mod.s.size(); ++m) {
        xs.emplace_back(static_cast<long long>(m));
        ys.push_back(mod.s[m]);
    }
    if (xs.size() < 3) throw NoPolynomialFit("ladder_polynomial: too few levels");
    auto p = exact_polynomial_fit(xs, ys, 9, /*require_confirmation=*/true);
    if (!p) throw NoPolynomialFit("ladder_polynomial: no confirmed low-degree fit");
    return *p;
}

std::optional<std::vector<std::pair<Rational, int>>> ladder_zero_positions(const LoweringModule& mod) {
    return rational_roots(ladder_polynomial(mod));
}

OperatorTriple ladder_matrices(const LoweringModule& mod) {
    OperatorTriple t;
    t.dim = mod.dim();
    t.nplus = Matrix(t.dim, t.dim);
    for (int m = 0; m < t.dim; ++m) {
        Rational n0m = mod.w0 + Rational(m);
        t.n0_exact.push_back(n0m);
        t.n0.push_back(n0m.to_double());
        if (m >= 1) t.nplus(m, m - 1) = std::sqrt(mod.s[static_cast<std::size_t>(m)].to_double());
    }
    t.nminus = t.nplus.transposed();
    return t;
}

double commutator_residual(const OperatorTriple& t, const StructurePolynomial& f) {
    Matrix comm = t.nplus * t.nminus - t.nminus * t.nplus;
    double res = 0.0;
    for (int i = 0; i + 1 < t.dim; ++i) {
        for (int j = 0; j + 1 < t.dim; ++j) {
            double expect = (i == j) ? f.p.eval(t.n0_exact[static_cast<std::size_t>(i)]).to_double() : 0.0;
            res = std::max(res, std::abs(comm(i, j) - expect));
        }
    }
    return res;
}

std::string module_to_json(const LoweringModule& mod) {
    nlohmann::json j;
    j["w0"] = mod.w0.str();
    if (mod.casimir)
        j["C"] = mod.casimir->str();
    else
        j["C"] = nullptr;
    j["D"] = mod.dim();
    nlohmann::json s = nlohmann::json::array();
    for (const auto& v : mod.s) s.push_back(v.str());
    j["s"] = s;
    if (mod.termination)
        j["termination"] = *mod.termination;
    else
        j["termination"] = nullptr;
    return j.dump(2);
}

LoweringModule module_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<Rational> s;
    for (const auto& v : j.at("s")) s.push_back(Rational::parse(v.get<std::string>()));
    LoweringModule mod = module_from_ladder(s, Rational::parse(j.at("w0").get<std::string>()));
    if (j.contains("C") && !j["C"].is_null()) mod.casimir = Rational::parse(j["C"].get<std::string>());
    return mod;
}

std::string matrix_to_csv(const Matrix& m) {
    std::string out;
    char buf[64];
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", m(i, j));
            out += buf;
            out += (j + 1 < m.cols()) ? ',' : '\n';
        }
    }
    return out;
}

namespace presets {

LoweringModule bg_module(const Rational& phi, int cutoff) {
    CasimirPolynomial g = telescope_g(su11_f());
    return build_module(g, -phi, cutoff);
}

LoweringModule oscillator_su11_module(int which_vacuum, int cutoff) {
    if (which_vacuum != 0 && which_vacuum != 1) throw Error("oscillator vacuum must be 0 or 1");
    CasimirPolynomial g = telescope_g(su11_f());
    Rational w0 = which_vacuum == 0 ? Rational(1, 4) : Rational(3, 4);
    return build_module(g, w0, cutoff);
}

LoweringModule su2_module(const Rational& ell, int cutoff) {
    CasimirPolynomial g = telescope_g(su2_f());
    return build_module(g, -ell, cutoff);
}

LoweringModule quadratic_module(const Rational& eps, int cutoff) {
    // ladder polynomial s(x) = x (x - 1/2 - eps)(x + 1/2 - eps); its backward
    // companion g(y) = s(1) - s(y + 1) satisfies g(0) = 0 and regenerates the
    // table through C - g(m - 1), and keeps the module extendable.
    RationalPoly x({Rational(0), Rational(1)});
    RationalPoly s_poly = x * RationalPoly({Rational(-1, 2) - eps, Rational(1)}) *
                          RationalPoly({Rational(1, 2) - eps, Rational(1)});
    RationalPoly g_poly = RationalPoly({s_poly.eval(Rational(1))}) - s_poly.shifted(Rational(1));
    return build_module(CasimirPolynomial{g_poly}, Rational(0), cutoff);
}

LoweringModule higgs_module(const Rational& c, const Rational& h, const Rational& w0, int cutoff) {
    CasimirPolynomial g = telescope_g(higgs_f(c, h));
    return build_module(g, w0, cutoff);
}

}  // namespace presets

}  // namespace polycs
