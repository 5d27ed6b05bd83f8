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

#include "polycs/measures.hpp"

#include <cmath>

#include "polycs/errors.hpp"
#include "polycs/specialfn.hpp"

namespace polycs {

MomentSequence moment_sequence(const LoweringModule& mod, int n_max) {
    if (mod.finite() && n_max >= mod.dim())
        throw Error("moment_sequence: module terminates below n_max");
    LoweringModule work = mod;
    if (n_max >= static_cast<int>(work.s.size())) work = work.extended(n_max + 1);
    if (n_max >= static_cast<int>(work.s.size()))
        throw Error("moment_sequence: ladder too short and not extendable");

    MomentSequence seq;
    seq.module_id = mod.fingerprint();
    seq.values.push_back(1.0);
    seq.log_values.push_back(0.0);
    seq.exact.push_back(Rational(1));
    bool exact_ok = true;
    Rational acc(1);
    double lacc = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        const Rational& s = work.s[static_cast<std::size_t>(n)];
        lacc += std::log(s.to_double());
        seq.log_values.push_back(lacc);
        seq.values.push_back(std::exp(lacc));
        if (exact_ok) {
            try {
                acc *= s;
                seq.exact.push_back(acc);
            } catch (const RationalOverflow&) {
                exact_ok = false;
            }
        }
    }
    return seq;
}

double bg_density(double r, const Rational& phi) {
    if (!(r > 0.0)) throw DomainViolation("bg_density: r must be positive");
    if (phi.sign() >= 0) throw DomainViolation("bg_density: phi must be negative");
    double p = phi.to_double();
    return std::pow(r, -2.0 * p + 1.0) * bessel_k(0.5 + p, 2.0 * r);
}

double bg_moment_density(double r, const Rational& phi) {
    if (!(r > 0.0)) throw DomainViolation("bg_moment_density: r must be positive");
    if (phi.sign() >= 0) throw DomainViolation("bg_moment_density: phi must be negative");
    double p = phi.to_double();
    return std::pow(r, -2.0 * p - 1.0) * bessel_k(-2.0 * p - 1.0, 2.0 * r);
}

double verify_moments(const std::function<double(double)>& density, const MomentSequence& moments,
                      int n_max, double quad_tol) {
    if (n_max >= static_cast<int>(moments.values.size()))
        throw Error("verify_moments: moment sequence shorter than n_max");
    std::vector<double> quad(static_cast<std::size_t>(n_max) + 1, 0.0);
    for (int n = 0; n <= n_max; ++n) {
        auto integrand = [&](double r) {
            double d = density(r);
            if (d == 0.0) return 0.0;
            return 2.0 * 3.14159265358979323846 * d * std::pow(r, 2.0 * n + 1.0);
        };
        quad[static_cast<std::size_t>(n)] = quad_semi_infinite(integrand, quad_tol);
    }
    if (quad[0] == 0.0) throw Error("verify_moments: candidate density has zero mass");
    double max_rel = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        double want = moments.values[static_cast<std::size_t>(n)] / moments.values[0];
        double got = quad[static_cast<std::size_t>(n)] / quad[0];
        max_rel = std::max(max_rel, std::abs(got - want) / std::abs(want));
    }
    return max_rel;
}

std::string moments_to_csv(const MomentSequence& m, const std::vector<double>* quadrature) {
    std::string out = "n,exact,value,quadrature,rel_error\n";
    char buf[96];
    for (std::size_t n = 0; n < m.values.size(); ++n) {
        std::string exact = n < m.exact.size() ? m.exact[n].str() : "";
        out += std::to_string(n) + "," + exact + ",";
        std::snprintf(buf, sizeof(buf), "%.17g", m.values[n]);
        out += buf;
        if (quadrature && n < quadrature->size() && !quadrature->empty()) {
            double q0 = (*quadrature)[0];
            double qn = (*quadrature)[n] / (q0 == 0.0 ? 1.0 : q0);
            double rel = std::abs(qn - m.values[n] / m.values[0]) /
                         std::max(1e-300, std::abs(m.values[n] / m.values[0]));
            std::snprintf(buf, sizeof(buf), ",%.17g,%.17g", qn, rel);
            out += buf;
        } else {
            out += ",,";
        }
        out += "\n";
    }
    return out;
}

}  // namespace polycs
