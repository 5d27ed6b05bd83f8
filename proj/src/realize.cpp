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

#include "polycs/realize.hpp"

#include <algorithm>
#include <json.hpp>
#include <numeric>

#include "polycs/errors.hpp"

namespace polycs {

namespace {

// falling factorial n (n-1) ... (n-k+1), the squared amplitude of a^k
Rational falling(long long n, int k) {
    Rational r(1);
    for (int i = 0; i < k; ++i) r *= Rational(n - i);
    return r;
}

// rising factorial (n+1)(n+2)...(n+k), the squared amplitude of (a+)^k
Rational rising(long long n, int k) {
    Rational r(1);
    for (int i = 1; i <= k; ++i) r *= Rational(n + i);
    return r;
}

void finalize_ops(RealizedTriple& t) {
    const int n = t.sector.size();
    t.plus.target.resize(static_cast<std::size_t>(n), -1);
    t.plus.sqamp.resize(static_cast<std::size_t>(n), Rational(0));
    t.plus.truncated.resize(static_cast<std::size_t>(n), false);
    t.minus.target.resize(static_cast<std::size_t>(n), -1);
    t.minus.sqamp.resize(static_cast<std::size_t>(n), Rational(0));
    t.minus.truncated.resize(static_cast<std::size_t>(n), false);
}

// resolve an image tuple: in-box -> index, outside box -> truncated
void set_image(const FockSector& sec, MonomialOp& op, int i, std::vector<int> image,
               const Rational& sqamp) {
    if (sqamp.is_zero()) return;  // genuinely annihilated
    op.sqamp[static_cast<std::size_t>(i)] = sqamp;
    bool in_box = true;
    for (std::size_t m = 0; m < image.size(); ++m) {
        if (image[m] < 0 || image[m] > sec.mode_cutoffs[m]) {
            in_box = false;
            break;
        }
    }
    if (!in_box) {
        op.truncated[static_cast<std::size_t>(i)] = true;
        return;
    }
    auto it = sec.index.find(image);
    if (it == sec.index.end())
        throw OrbitLeavesCutoff("generator image leaves the charge sector");
    op.target[static_cast<std::size_t>(i)] = it->second;
}

}  // namespace

RealizedTriple realize_su11_single(int cutoff) {
    if (cutoff < 4) throw Error("realize_su11_single: cutoff must be at least 4");
    RealizedTriple t;
    t.recipe = "K- = a^2/2, K+ = (a+)^2/2, K0 = (a a+ + a+ a)/4";
    t.sector.mode_cutoffs = {cutoff};
    for (int n = 0; n <= cutoff; ++n) {
        t.sector.index[{n}] = t.sector.size();
        t.sector.basis.push_back({n});
        t.n0.push_back(Rational(2 * n + 1, 4));
    }
    finalize_ops(t);
    for (int i = 0; i < t.sector.size(); ++i) {
        int n = t.sector.basis[static_cast<std::size_t>(i)][0];
        // K- = a^2/2: amplitude^2 = n(n-1)/4
        set_image(t.sector, t.minus, i, {n - 2}, falling(n, 2) / Rational(4));
        // K+ = (a+)^2/2: amplitude^2 = (n+1)(n+2)/4
        set_image(t.sector, t.plus, i, {n + 2}, rising(n, 2) / Rational(4));
    }
    return t;
}

RealizedTriple realize_pair(const std::vector<int>& cutoffs) {
    if (cutoffs.size() != 2) throw Error("realize_pair: need two mode cutoffs");
    RealizedTriple t;
    t.recipe = "K+ = a+ b+, K- = a b, K0 = (na + nb + 1)/2";
    t.sector.mode_cutoffs = cutoffs;
    for (int na = 0; na <= cutoffs[0]; ++na) {
        for (int nb = 0; nb <= cutoffs[1]; ++nb) {
            t.sector.index[{na, nb}] = t.sector.size();
            t.sector.basis.push_back({na, nb});
            t.n0.push_back(Rational(na + nb + 1, 2));
        }
    }
    finalize_ops(t);
    for (int i = 0; i < t.sector.size(); ++i) {
        auto& st = t.sector.basis[static_cast<std::size_t>(i)];
        int na = st[0], nb = st[1];
        set_image(t.sector, t.minus, i, {na - 1, nb - 1}, Rational(na) * Rational(nb));
        set_image(t.sector, t.plus, i, {na + 1, nb + 1}, Rational(na + 1) * Rational(nb + 1));
    }
    return t;
}

RealizedTriple realize_trilinear(const std::vector<int>& cutoffs, const Rational& h0, long long q) {
    if (cutoffs.size() != 3) throw Error("realize_trilinear: need three mode cutoffs");
    RealizedTriple t;
    t.recipe = "J+ = a+ b c, J- = a b+ c+, J0 = (na - K0)/2";
    t.sector.mode_cutoffs = cutoffs;
    t.sector.charges["h0"] = h0;
    t.sector.charges["q"] = Rational(q);
    for (int na = 0; na <= cutoffs[0]; ++na) {
        for (int nb = 0; nb <= cutoffs[1]; ++nb) {
            for (int nc = 0; nc <= cutoffs[2]; ++nc) {
                if (nb - nc != q) continue;
                // h0 = (na + (nb + nc + 1)/2)/2
                Rational state_h0 = (Rational(na) + Rational(nb + nc + 1, 2)) / Rational(2);
                if (state_h0 != h0) continue;
                t.sector.index[{na, nb, nc}] = t.sector.size();
                t.sector.basis.push_back({na, nb, nc});
                t.n0.push_back((Rational(na) - Rational(nb + nc + 1, 2)) / Rational(2));
            }
        }
    }
    if (t.sector.basis.empty())
        throw EmptySector("trilinear sector (h0 = " + h0.str() + ", q = " + std::to_string(q) +
                          ") is empty");
    finalize_ops(t);
    for (int i = 0; i < t.sector.size(); ++i) {
        auto& st = t.sector.basis[static_cast<std::size_t>(i)];
        int na = st[0], nb = st[1], nc = st[2];
        // J- = a b+ c+: amp^2 = na (nb+1)(nc+1)
        set_image(t.sector, t.minus, i, {na - 1, nb + 1, nc + 1},
                  Rational(na) * Rational(nb + 1) * Rational(nc + 1));
        // J+ = a+ b c: amp^2 = (na+1) nb nc
        set_image(t.sector, t.plus, i, {na + 1, nb - 1, nc - 1},
                  Rational(na + 1) * Rational(nb) * Rational(nc));
    }
    return t;
}

RealizedTriple realize_multiphoton(int m, int n, const std::vector<int>& cutoffs,
                                   const Rational& h0) {
    if (m < 1 || n < 1 || m + n > 6)
        throw Error("realize_multiphoton: need m, n >= 1 and m + n <= 6");
    if (cutoffs.size() != 2) throw Error("realize_multiphoton: need two mode cutoffs");
    RealizedTriple t;
    t.recipe = "N+ = a0^" + std::to_string(m) + " (a1+)^" + std::to_string(n);
    t.sector.mode_cutoffs = cutoffs;
    t.sector.charges["h0"] = h0;
    const int g = std::gcd(m, n);
    const Rational w0(n / g), w1(m / g);
    for (int k0 = 0; k0 <= cutoffs[0]; ++k0) {
        for (int k1 = 0; k1 <= cutoffs[1]; ++k1) {
            Rational charge = (w0 * Rational(k0) + w1 * Rational(k1)) / Rational(m + n);
            if (charge != h0) continue;
            t.sector.index[{k0, k1}] = t.sector.size();
            t.sector.basis.push_back({k0, k1});
            t.n0.push_back(Rational(k1 - k0, m + n));
        }
    }
    if (t.sector.basis.empty()) throw EmptySector("multiphoton sector (h0 = " + h0.str() + ") empty");
    finalize_ops(t);
    for (int i = 0; i < t.sector.size(); ++i) {
        auto& st = t.sector.basis[static_cast<std::size_t>(i)];
        int k0 = st[0], k1 = st[1];
        // N+ = a0^m (a1+)^n: amp^2 = k0!/(k0-m)! * (k1+1)...(k1+n)
        set_image(t.sector, t.plus, i, {k0 - m, k1 + n}, falling(k0, m) * rising(k1, n));
        // N- = a1^n (a0+)^m
        set_image(t.sector, t.minus, i, {k0 + m, k1 - n}, rising(k0, m) * falling(k1, n));
    }
    return t;
}

RealizedTriple realize_dicke(int n_atoms, int flip_order, int cutoff, const Rational& h0) {
    if (n_atoms < 1 || n_atoms > 6) throw Error("realize_dicke: 1..6 atoms");
    if (flip_order < 1 || flip_order > 3) throw Error("realize_dicke: flip order 1..3");
    RealizedTriple t;
    t.recipe = "N- = Jspin- (a+)^" + std::to_string(flip_order) + ", N0 = sum sigma0";
    t.sector.mode_cutoffs = {n_atoms, cutoff};  // first slot indexes the spin projection
    t.sector.charges["h0"] = h0;
    const Rational j(n_atoms, 2);
    // spin index idx = m + j in 0..n_atoms, photon number nph
    for (int idx = 0; idx <= n_atoms; ++idx) {
        Rational msz = Rational(idx) - j;
        for (int nph = 0; nph <= cutoff; ++nph) {
            if (Rational(flip_order) * msz + Rational(nph) != h0) continue;
            t.sector.index[{idx, nph}] = t.sector.size();
            t.sector.basis.push_back({idx, nph});
            t.n0.push_back(msz);
        }
    }
    if (t.sector.basis.empty()) throw EmptySector("dicke sector (h0 = " + h0.str() + ") empty");
    finalize_ops(t);
    for (int i = 0; i < t.sector.size(); ++i) {
        auto& st = t.sector.basis[static_cast<std::size_t>(i)];
        int idx = st[0], nph = st[1];
        Rational msz = Rational(idx) - j;
        // J- amp^2 = (j+m)(j-m+1); photons raised by flip_order
        Rational spin_down = (j + msz) * (j - msz + Rational(1));
        set_image(t.sector, t.minus, i, {idx - 1, nph + flip_order},
                  spin_down * rising(nph, flip_order));
        Rational spin_up = (j - msz) * (j + msz + Rational(1));
        set_image(t.sector, t.plus, i, {idx + 1, nph - flip_order},
                  spin_up * falling(nph, flip_order));
    }
    return t;
}

std::vector<Rational> dicke_sector_charges(int n_atoms, int flip_order, int cutoff) {
    std::vector<Rational> out;
    const Rational j(n_atoms, 2);
    for (int idx = 0; idx <= n_atoms; ++idx) {
        for (int nph = 0; nph <= cutoff; ++nph) {
            Rational h0 = Rational(flip_order) * (Rational(idx) - j) + Rational(nph);
            if (std::find(out.begin(), out.end(), h0) == out.end()) out.push_back(h0);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rational commutator_diagonal(const RealizedTriple& t, int i) {
    return t.minus.sqamp[static_cast<std::size_t>(i)] - t.plus.sqamp[static_cast<std::size_t>(i)];
}

std::vector<int> interior_states(const RealizedTriple& t) {
    std::vector<int> out;
    for (int i = 0; i < t.sector.size(); ++i) {
        if (t.minus.truncated[static_cast<std::size_t>(i)]) continue;
        if (t.plus.truncated[static_cast<std::size_t>(i)]) continue;
        out.push_back(i);
    }
    return out;
}

StructurePolynomial closure_fit(const RealizedTriple& t, int max_degree) {
    // adjoint sanity: lowering from i and raising back must return to i with
    // the same squared amplitude (and vice versa)
    for (int i = 0; i < t.sector.size(); ++i) {
        int down = t.minus.target[static_cast<std::size_t>(i)];
        if (down >= 0) {
            if (t.plus.target[static_cast<std::size_t>(down)] != i ||
                t.plus.sqamp[static_cast<std::size_t>(down)] != t.minus.sqamp[static_cast<std::size_t>(i)])
                throw NotDiagonal("commutator has off-diagonal entries: lowering from state " +
                                  std::to_string(i) + " does not return");
        }
        int up = t.plus.target[static_cast<std::size_t>(i)];
        if (up >= 0) {
            if (t.minus.target[static_cast<std::size_t>(up)] != i ||
                t.minus.sqamp[static_cast<std::size_t>(up)] != t.plus.sqamp[static_cast<std::size_t>(i)])
                throw NotDiagonal("commutator has off-diagonal entries: raising from state " +
                                  std::to_string(i) + " does not return");
        }
    }
    // collect (N0, diagonal) over interior states; repeated N0 values must agree
    std::vector<Rational> xs, ys;
    for (int i : interior_states(t)) {
        Rational x = t.n0[static_cast<std::size_t>(i)];
        Rational y = commutator_diagonal(t, i);
        bool dup = false;
        for (std::size_t k = 0; k < xs.size(); ++k) {
            if (xs[k] == x) {
                if (ys[k] != y)
                    throw NoPolynomialFit("commutator diagonal is not a function of N0");
                dup = true;
                break;
            }
        }
        if (!dup) {
            xs.push_back(x);
            ys.push_back(y);
        }
    }
    if (xs.size() < 2) throw NoPolynomialFit("not enough interior states to fit a polynomial");
    auto p = exact_polynomial_fit(xs, ys, max_degree, /*require_confirmation=*/false);
    if (!p)
        throw NoPolynomialFit("no polynomial of degree <= " + std::to_string(max_degree) +
                              " matches the interior diagonal");
    return StructurePolynomial{*p};
}

std::vector<int> find_vacua(const RealizedTriple& t) {
    std::vector<int> out;
    for (int i = 0; i < t.sector.size(); ++i) {
        if (t.minus.sqamp[static_cast<std::size_t>(i)].is_zero()) out.push_back(i);
    }
    return out;
}

LoweringModule sector_to_module(const RealizedTriple& t, int vacuum_index) {
    if (vacuum_index < 0 || vacuum_index >= t.sector.size())
        throw Error("sector_to_module: bad vacuum index");
    if (!t.minus.sqamp[static_cast<std::size_t>(vacuum_index)].is_zero())
        throw Error("sector_to_module: chosen state is not annihilated by the lowering operator");

    std::vector<Rational> s{Rational(0)};
    int cur = vacuum_index;
    bool terminated = false;
    while (true) {
        const Rational& up = t.plus.sqamp[static_cast<std::size_t>(cur)];
        if (up.is_zero()) {
            terminated = true;
            break;
        }
        if (t.plus.truncated[static_cast<std::size_t>(cur)]) break;  // box edge
        int next = t.plus.target[static_cast<std::size_t>(cur)];
        if (next < 0) throw OrbitLeavesCutoff("raising image left the sector");
        s.push_back(up);
        cur = next;
    }
    if (terminated) s.push_back(Rational(0));

    LoweringModule mod = module_from_ladder(s, t.n0[static_cast<std::size_t>(vacuum_index)]);
    try {
        StructurePolynomial f = closure_fit(t);
        CasimirPolynomial g = telescope_g(f);
        Rational c = casimir_value(g, mod.w0);
        // accept the generator only if it regenerates the orbit ladder exactly
        bool consistent = true;
        for (std::size_t m = 0; m < mod.s.size(); ++m) {
            if (c - g.eval(mod.w0 + Rational(static_cast<long long>(m) - 1)) != mod.s[m]) {
                consistent = false;
                break;
            }
        }
        if (consistent) {
            mod.casimir = c;
            mod.gen = g;
        }
    } catch (const Error&) {
        // ladder-only module; Casimir left unset
    }
    return mod;
}

std::string sector_to_json(const RealizedTriple& t) {
    nlohmann::json j;
    j["recipe"] = t.recipe;
    nlohmann::json charges = nlohmann::json::object();
    for (const auto& [k, v] : t.sector.charges) charges[k] = v.str();
    j["charges"] = charges;
    j["mode_cutoffs"] = t.sector.mode_cutoffs;
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& tup : t.sector.basis) basis.push_back(tup);
    j["basis"] = basis;
    nlohmann::json n0 = nlohmann::json::array();
    for (const auto& v : t.n0) n0.push_back(v.str());
    j["n0"] = n0;
    return j.dump(2);
}

std::string sparse_to_csv(const RealizedTriple& t, bool plus_part) {
    const MonomialOp& op = plus_part ? t.plus : t.minus;
    std::string out = "row,col,squared_amplitude\n";
    for (int i = 0; i < t.sector.size(); ++i) {
        int tgt = op.target[static_cast<std::size_t>(i)];
        if (tgt < 0) continue;
        out += std::to_string(tgt) + "," + std::to_string(i) + "," +
               op.sqamp[static_cast<std::size_t>(i)].str() + "\n";
    }
    return out;
}

}  // namespace polycs
