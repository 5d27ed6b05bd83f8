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

#include "polycs/states.hpp"

#include <cmath>
#include <json.hpp>

#include "polycs/errors.hpp"
#include "polycs/specialfn.hpp"

namespace polycs {

namespace {

double vec_norm_sq(const std::vector<std::complex<double>>& v) {
    double s = 0.0;
    for (const auto& c : v) s += std::norm(c);
    return s;
}

void normalize_with_phase(std::vector<std::complex<double>>& v) {
    double n = std::sqrt(vec_norm_sq(v));
    if (n == 0.0) return;
    std::complex<double> phase(1.0, 0.0);
    for (const auto& c : v) {
        if (std::abs(c) > 1e-300) {
            phase = std::conj(c) / std::abs(c);
            break;
        }
    }
    for (auto& c : v) c *= phase / n;
}

int structure_degree(const LoweringModule& mod) {
    if (!mod.gen) {
        // fall back to the ladder polynomial; deg f = deg s - 1
        return ladder_polynomial(mod).degree() - 1;
    }
    return mod.gen->degree() - 1;
}

}  // namespace

CoherentState annihilation_series(const LoweringModule& mod, std::complex<double> alpha) {
    CoherentState st;
    st.family = Family::Annihilation;
    st.parameter = alpha;
    st.module_id = mod.fingerprint();
    const int d = mod.dim();
    st.coeffs.assign(static_cast<std::size_t>(d), {0.0, 0.0});
    std::complex<double> c(1.0, 0.0);
    st.coeffs[0] = c;
    for (int n = 1; n < d; ++n) {
        c *= alpha / std::sqrt(mod.s[static_cast<std::size_t>(n)].to_double());
        st.coeffs[static_cast<std::size_t>(n)] = c;
    }
    normalize_with_phase(st.coeffs);
    st.norm_sq = 1.0;
    st.tail_bound = 0.0;
    st.normalizable = true;
    return st;
}

CoherentState annihilation_cs(const LoweringModule& mod, std::complex<double> alpha, double tol,
                              int max_cutoff) {
    if (mod.finite())
        throw PoleOnSpectrum(
            "annihilation eigenstate needs a canonical conjugate; no canonical conjugate on finite "
            "module",
            *mod.termination);
    LoweringModule work = mod;
    const double a2 = std::norm(alpha);
    while (true) {
        // certified once the term ratio bound a2 / s[next] stays below 1/2 and
        // the geometric tail from the last kept term is below tol
        const int d = work.dim();
        std::vector<double> mags(static_cast<std::size_t>(d), 0.0);
        double m = 1.0, total = 1.0;
        for (int n = 1; n < d; ++n) {
            m *= a2 / work.s[static_cast<std::size_t>(n)].to_double();
            mags[static_cast<std::size_t>(n)] = m;
            total += m;
        }
        // a2/s[m] shrinks as the ladder grows, so the last stored value bounds
        // every later term ratio
        double ratio = a2 / work.s.back().to_double();
        if (alpha == std::complex<double>(0.0, 0.0)) ratio = 0.0;
        if (ratio < 0.5) {
            double tail = mags.back() * ratio / (1.0 - ratio);
            if (tail <= tol * total) {
                CoherentState st;
                st.family = Family::Annihilation;
                st.parameter = alpha;
                st.module_id = mod.fingerprint();
                st.coeffs.assign(static_cast<std::size_t>(d), {0.0, 0.0});
                std::complex<double> c(1.0, 0.0);
                st.coeffs[0] = c;
                for (int n = 1; n < d; ++n) {
                    c *= alpha / std::sqrt(work.s[static_cast<std::size_t>(n)].to_double());
                    st.coeffs[static_cast<std::size_t>(n)] = c;
                }
                normalize_with_phase(st.coeffs);
                st.norm_sq = 1.0;
                st.tail_bound = tail / total;
                st.normalizable = true;
                return st;
            }
        }
        if (d >= max_cutoff)
            throw CutoffExceeded("annihilation_cs: tail bound " + std::to_string(tol) +
                                 " not met at cutoff " + std::to_string(max_cutoff));
        work = work.extended(std::min(max_cutoff, 2 * d));
        if (work.dim() <= d)
            throw CutoffExceeded("annihilation_cs: module not extendable past " + std::to_string(d));
    }
}

CoherentState exponential_cs(const LoweringModule& mod, std::complex<double> gamma, double tol,
                             int max_cutoff) {
    CoherentState st;
    st.family = Family::Exponential;
    st.parameter = gamma;
    st.module_id = mod.fingerprint();
    const double g2 = std::norm(gamma);

    if (mod.finite() || g2 == 0.0) {
        // finite sum (or the vacuum): always normalizable
        const int d = mod.dim();
        st.coeffs.assign(static_cast<std::size_t>(d), {0.0, 0.0});
        std::complex<double> c(1.0, 0.0);
        st.coeffs[0] = c;
        for (int n = 1; n < d; ++n) {
            c *= gamma * std::sqrt(mod.s[static_cast<std::size_t>(n)].to_double()) /
                 static_cast<double>(n);
            st.coeffs[static_cast<std::size_t>(n)] = c;
        }
        normalize_with_phase(st.coeffs);
        st.norm_sq = 1.0;
        st.tail_bound = 0.0;
        st.normalizable = true;
        return st;
    }

    const int deg_f = structure_degree(mod);
    // term ratio |c_{n+1}/c_n|^2 = |gamma|^2 s[n+1]/(n+1)^2 tends to 0 for
    // deg f = 0, |gamma|^2 for deg f = 1, and grows without bound above that
    const bool normalizable = (deg_f <= 0) || (deg_f == 1 && g2 < 1.0);

    LoweringModule work = mod;
    if (!normalizable) {
        const int d = work.dim();
        st.coeffs.assign(static_cast<std::size_t>(d), {0.0, 0.0});
        std::complex<double> c(1.0, 0.0);
        st.coeffs[0] = c;
        for (int n = 1; n < d; ++n) {
            c *= gamma * std::sqrt(work.s[static_cast<std::size_t>(n)].to_double()) /
                 static_cast<double>(n);
            st.coeffs[static_cast<std::size_t>(n)] = c;
        }
        st.norm_sq = vec_norm_sq(st.coeffs);
        st.tail_bound = std::numeric_limits<double>::infinity();
        st.normalizable = false;
        return st;
    }

    while (true) {
        const int d = work.dim();
        std::vector<std::complex<double>> coeffs(static_cast<std::size_t>(d), {0.0, 0.0});
        std::complex<double> c(1.0, 0.0);
        coeffs[0] = c;
        double total = 1.0;
        for (int n = 1; n < d; ++n) {
            c *= gamma * std::sqrt(work.s[static_cast<std::size_t>(n)].to_double()) /
                 static_cast<double>(n);
            coeffs[static_cast<std::size_t>(n)] = c;
            total += std::norm(c);
        }
        // successive-term ratio |c_{m+1}/c_m|^2 = g2 s[m+1]/(m+1)^2 is monotone
        // toward g2 for deg f = 1, so the max of the last computed ratio and
        // the limit bounds every later one
        double ratio = g2 * work.s.back().to_double() / (static_cast<double>(d - 1) * (d - 1));
        if (deg_f == 1 && ratio < g2) ratio = g2;
        if (ratio < 1.0) {
            double tail = std::norm(c) * ratio / (1.0 - ratio);
            if (tail <= tol * total) {
                st.coeffs = std::move(coeffs);
                normalize_with_phase(st.coeffs);
                st.norm_sq = 1.0;
                st.tail_bound = tail / total;
                st.normalizable = true;
                return st;
            }
        }
        if (d >= max_cutoff)
            throw CutoffExceeded("exponential_cs: tail not certified at cutoff " +
                                 std::to_string(max_cutoff));
        work = work.extended(std::min(max_cutoff, 2 * d));
        if (work.dim() <= d) throw CutoffExceeded("exponential_cs: module not extendable");
    }
}

CoherentState displacement_cs(const LoweringModule& mod, const UndeformedMapSpec& map,
                              std::complex<double> eta, int cutoff) {
    LoweringModule work = mod.dim() >= cutoff ? mod : mod.extended(cutoff);
    const int d = work.dim();
    Matrix nbar = undeformed_map(work, map.b_sign, map.epsilon_const);

    SparseC gen;
    gen.n = d;
    for (int m = 1; m < d; ++m) {
        double root = std::sqrt(work.s[static_cast<std::size_t>(m)].to_double());
        gen.entries.push_back({m, m - 1, eta * root});
        gen.entries.push_back({m - 1, m, -std::conj(eta) * nbar(m - 1, m)});
    }

    // the generator is anti-Hermitian iff N-bar coincides with N+^T
    double skew = 0.0, scale = 1e-300;
    for (int m = 1; m < d; ++m) {
        double up = nbar(m - 1, m);
        double down = std::sqrt(work.s[static_cast<std::size_t>(m)].to_double());
        skew = std::max(skew, std::abs(up - down));
        scale = std::max(scale, std::abs(down));
    }
    const bool anti_hermitian = skew <= 1e-12 * scale;

    std::vector<std::complex<double>> v(static_cast<std::size_t>(d), {0.0, 0.0});
    v[0] = {1.0, 0.0};
    v = expm_apply(gen, std::move(v));

    CoherentState st;
    st.family = Family::Displacement;
    st.parameter = eta;
    st.module_id = mod.fingerprint();
    st.coeffs = std::move(v);
    double total = vec_norm_sq(st.coeffs);
    st.tail_bound = std::norm(st.coeffs.back()) / std::max(total, 1e-300);
    if (anti_hermitian) {
        normalize_with_phase(st.coeffs);
        st.norm_sq = 1.0;
        st.normalizable = true;
    } else {
        st.norm_sq = total;
        st.normalizable = false;
    }
    return st;
}

std::complex<double> overlap(const CoherentState& x, const CoherentState& y) {
    if (x.module_id != y.module_id)
        throw ModuleMismatch("overlap between states on different modules");
    std::complex<double> acc(0.0, 0.0);
    const std::size_t n = std::min(x.coeffs.size(), y.coeffs.size());
    for (std::size_t i = 0; i < n; ++i) acc += std::conj(x.coeffs[i]) * y.coeffs[i];
    return acc;
}

double fidelity(const CoherentState& x, const CoherentState& y) {
    double nx = vec_norm_sq(x.coeffs);
    double ny = vec_norm_sq(y.coeffs);
    if (nx == 0.0 || ny == 0.0) return 0.0;
    return std::norm(overlap(x, y)) / (nx * ny);
}

NormResult norm_hypergeometric(const LoweringModule& mod, std::complex<double> alpha) {
    const double a2 = std::norm(alpha);
    auto direct = [&]() {
        double sum = 1.0, term = 1.0;
        for (std::size_t n = 1; n < 100000; ++n) {
            double s;
            if (n < mod.s.size())
                s = mod.s[n].to_double();
            else if (mod.gen)
                s = (*mod.casimir - mod.gen->eval(mod.w0 + Rational(static_cast<long long>(n) - 1)))
                        .to_double();
            else
                break;
            if (s == 0.0) break;  // finite module: the series is a finite sum
            term *= a2 / s;
            sum += term;
            if (term < 1e-17 * sum) break;
        }
        return sum;
    };

    try {
        RationalPoly s_poly = ladder_polynomial(mod);
        auto roots = rational_roots(s_poly);
        if (!roots) return {direct(), false};
        // s(x) = lead * prod (x - rho_j); the root at 0 supplies the n! and
        // the rest give Pochhammer factors (1 - rho_j)_n
        bool has_zero = false;
        std::vector<double> b;
        for (const auto& [root, mult] : *roots) {
            int m = mult;
            if (root.is_zero()) {
                has_zero = true;
                m -= 1;
            }
            for (int k = 0; k < m; ++k) b.push_back((Rational(1) - root).to_double());
        }
        if (!has_zero) return {direct(), false};
        double lead = s_poly.coeffs().back().to_double();
        if (lead <= 0.0) return {direct(), false};
        SeriesResult r = pfq({}, b, std::complex<double>(a2 / lead, 0.0), 1e-15);
        if (!r.converged) return {direct(), false};
        return {r.value.real(), true};
    } catch (const NoPolynomialFit&) {
        return {direct(), false};
    } catch (const BParameterPole&) {
        return {direct(), false};
    }
}

std::string state_to_json(const CoherentState& st) {
    nlohmann::json j;
    switch (st.family) {
        case Family::Annihilation: j["family"] = "annihilation"; break;
        case Family::Exponential: j["family"] = "exponential"; break;
        case Family::Displacement: j["family"] = "displacement"; break;
    }
    j["parameter"] = {st.parameter.real(), st.parameter.imag()};
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : st.coeffs) cs.push_back({c.real(), c.imag()});
    j["coeffs"] = cs;
    j["norm_sq"] = st.norm_sq;
    j["tail_bound"] = st.tail_bound;
    j["normalizable"] = st.normalizable;
    return j.dump(2);
}

std::string state_to_csv(const CoherentState& st) {
    std::string out = "level,weight\n";
    char buf[64];
    for (std::size_t n = 0; n < st.coeffs.size(); ++n) {
        std::snprintf(buf, sizeof(buf), "%zu,%.17g\n", n, std::norm(st.coeffs[n]));
        out += buf;
    }
    return out;
}

}  // namespace polycs
