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

#include "polycs/conjugate.hpp"

#include <cmath>
#include <json.hpp>

#include "polycs/errors.hpp"

namespace polycs {

Rational delta_for_vacuum(const Rational& w0) { return Rational(1) - w0; }

ConjugateSpec conjugate_spec(const LoweringModule& mod, const Rational& delta) {
    ConjugateSpec spec;
    spec.delta = delta;
    for (std::size_t m = 0; m + 1 < mod.s.size(); ++m) {
        const Rational& s_next = mod.s[m + 1];
        if (s_next.is_zero()) {
            spec.pole_levels.push_back(static_cast<int>(m));
            continue;
        }
        Rational F = (mod.w0 + Rational(static_cast<long long>(m)) + delta) / s_next;
        spec.F_diag.push_back(F.to_double());
    }
    return spec;
}

Matrix conjugate_raising(const LoweringModule& mod, const Rational& delta) {
    if (mod.finite())
        throw PoleOnSpectrum(
            "no canonical conjugate on finite module: F diverges on the highest state (level " +
                std::to_string(*mod.termination - 1) + ")",
            *mod.termination - 1);
    const int d = mod.dim();
    Matrix t(d, d);
    for (int m = 0; m + 1 < d; ++m) {
        const Rational& s_next = mod.s[static_cast<std::size_t>(m) + 1];
        if (s_next.is_zero())
            throw PoleOnSpectrum("conjugate pole at level " + std::to_string(m), m);
        double num = (mod.w0 + Rational(m) + delta).to_double();
        t(m + 1, m) = num / std::sqrt(s_next.to_double());
    }
    return t;
}

std::vector<std::vector<double>> dual_vacua_of(const Matrix& conjugate_plus, double tol) {
    return kernel_basis(conjugate_plus.transposed(), tol);
}

std::vector<std::vector<double>> dual_vacua(const LoweringModule& mod, const Rational& delta,
                                            double tol) {
    // the kernel diagnostic works on finite modules too: within the module
    // every stored s[m] with 1 <= m < dim is nonzero, so the restricted
    // matrix exists even where the canonical conjugate does not
    const int d = mod.dim();
    Matrix t(d, d);
    for (int m = 0; m + 1 < d; ++m) {
        double num = (mod.w0 + Rational(m) + delta).to_double();
        t(m + 1, m) = num / std::sqrt(mod.s[static_cast<std::size_t>(m) + 1].to_double());
    }
    return dual_vacua_of(t, tol);
}

UndeformedMapSpec undeformed_spec(const LoweringModule& mod, int b_sign, const Rational& eps) {
    if (b_sign != 1 && b_sign != -1) throw Error("undeformed map: b must be +1 or -1");
    UndeformedMapSpec spec;
    spec.b_sign = b_sign;
    spec.epsilon_const = eps;
    const int d = mod.dim();
    for (int m = 1; m < d; ++m) {
        const Rational& sm = mod.s[static_cast<std::size_t>(m)];
        if (sm.is_zero()) throw PoleOnSpectrum("undeformed map pole at level " + std::to_string(m), m);
        Rational x = mod.w0 + Rational(m);
        Rational G = (Rational(b_sign) * (x * x - x) + eps) / sm;
        spec.G_diag.push_back(G.to_double());
    }
    return spec;
}

Matrix undeformed_map(const LoweringModule& mod, int b_sign, const Rational& eps) {
    UndeformedMapSpec spec = undeformed_spec(mod, b_sign, eps);
    const int d = mod.dim();
    Matrix nbar(d, d);
    for (int m = 1; m < d; ++m) {
        double root = std::sqrt(mod.s[static_cast<std::size_t>(m)].to_double());
        nbar(m - 1, m) = root * spec.G_diag[static_cast<std::size_t>(m) - 1];
    }
    return nbar;
}

double mapped_commutator_residual(const LoweringModule& mod, const Matrix& nbar_minus, int b_sign) {
    OperatorTriple t = ladder_matrices(mod);
    Matrix comm = t.nplus * nbar_minus - nbar_minus * t.nplus;
    double res = 0.0;
    for (int i = 1; i + 1 < t.dim; ++i) {
        for (int j = 1; j + 1 < t.dim; ++j) {
            double expect = (i == j) ? -2.0 * b_sign * t.n0[static_cast<std::size_t>(i)] : 0.0;
            res = std::max(res, std::abs(comm(i, j) - expect));
        }
    }
    return res;
}

std::string conjugate_spec_to_json(const ConjugateSpec& spec) {
    nlohmann::json j;
    j["delta"] = spec.delta.str();
    nlohmann::json f = nlohmann::json::array();
    char buf[64];
    for (double v : spec.F_diag) {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        f.push_back(std::string(buf));
    }
    j["F_diag"] = f;
    j["pole_levels"] = spec.pole_levels;
    return j.dump(2);
}

}  // namespace polycs
