#include <doctest.h>

#include "polycs/errors.hpp"
#include "polycs/realize.hpp"
#include "polycs/states.hpp"

using namespace polycs;

TEST_SUITE("realize") {
    TEST_CASE("single-oscillator su(1,1): weights, Casimir, closure") {
        RealizedTriple t = realize_su11_single(24);
        CHECK(t.n0[0] == Rational(1, 4));  // K0 on the Fock vacuum
        // Casimir operator C = K- K+ + g(K0) is 3/16 on every state whose
        // raising image stays in the box
        CasimirPolynomial g = telescope_g(presets::su11_f());
        for (int i = 0; i < t.sector.size(); ++i) {
            if (t.plus.truncated[static_cast<std::size_t>(i)]) continue;
            Rational c = t.plus.sqamp[static_cast<std::size_t>(i)] +
                         g.eval(t.n0[static_cast<std::size_t>(i)]);
            CHECK(c == Rational(3, 16));
        }
        // [K+, K-] = -2 K0 exactly on every state (amplitudes are exact)
        for (int i = 0; i < t.sector.size(); ++i)
            CHECK(commutator_diagonal(t, i) == Rational(-2) * t.n0[static_cast<std::size_t>(i)]);
        // fit recovers f = -2H
        CHECK(closure_fit(t).p == presets::su11_f().p);
    }

    TEST_CASE("single-oscillator vacua are |0> and |1>") {
        RealizedTriple t = realize_su11_single(16);
        auto vac = find_vacua(t);
        REQUIRE(vac.size() == 2);
        CHECK(t.sector.basis[static_cast<std::size_t>(vac[0])][0] == 0);
        CHECK(t.sector.basis[static_cast<std::size_t>(vac[1])][0] == 1);
        // sector modules reproduce the two oscillator ladders
        LoweringModule even = sector_to_module(t, vac[0]);
        CHECK(even.w0 == Rational(1, 4));
        for (std::size_t m = 1; m < even.s.size(); ++m)
            CHECK(even.s[m] == Rational(static_cast<long long>(m)) *
                                   (Rational(static_cast<long long>(m)) - Rational(1, 2)));
        LoweringModule odd = sector_to_module(t, vac[1]);
        CHECK(odd.w0 == Rational(3, 4));
        for (std::size_t m = 1; m < odd.s.size(); ++m)
            CHECK(odd.s[m] == Rational(static_cast<long long>(m)) *
                                  (Rational(static_cast<long long>(m)) + Rational(1, 2)));
    }

    TEST_CASE("pair realization: sector Casimir (1 - q^2)/4 and ladder m(m+q)") {
        RealizedTriple t = realize_pair({14, 14});
        CHECK(closure_fit(t).p == presets::su11_f().p);  // f = -2 K0
        auto vacua = find_vacua(t);
        // one vacuum per q chain: all states with min(na, nb) = 0
        CHECK(vacua.size() == 29);
        for (int v : vacua) {
            auto& st = t.sector.basis[static_cast<std::size_t>(v)];
            CHECK(std::min(st[0], st[1]) == 0);
            long long q = st[0] - st[1];
            LoweringModule mod = sector_to_module(t, v);
            REQUIRE(mod.casimir.has_value());
            CHECK(*mod.casimir == (Rational(1) - Rational(q) * Rational(q)) / Rational(4));
            for (std::size_t m = 1; m < mod.s.size(); ++m) {
                Rational mm(static_cast<long long>(m));
                CHECK(mod.s[m] == mm * (mm + Rational(std::abs(q))));
            }
        }
    }

    TEST_CASE("trilinear: the exact commutator diagonal in occupation numbers") {
        // na(nb+1)(nc+1) - (na+1) nb nc on each sector state
        RealizedTriple t = realize_trilinear({8, 8, 8}, Rational(13, 4), 0);
        REQUIRE(t.sector.size() > 0);
        for (int i = 0; i < t.sector.size(); ++i) {
            auto& st = t.sector.basis[static_cast<std::size_t>(i)];
            long long na = st[0], nb = st[1], nc = st[2];
            Rational expect = Rational(na) * Rational(nb + 1) * Rational(nc + 1) -
                              Rational(na + 1) * Rational(nb) * Rational(nc);
            CHECK(commutator_diagonal(t, i) == expect);
        }
    }

    TEST_CASE("trilinear closure fit reproduces the sector cubic of J0") {
        // the sector is non-empty when 4 h0 - q - 1 is an even non-negative count
        struct HQ {
            Rational h0;
            long long q;
        };
        for (const HQ& c : {HQ{Rational(13, 4), 0}, HQ{Rational(4), 1}, HQ{Rational(5), -3}}) {
            RealizedTriple t = realize_trilinear({12, 12, 12}, c.h0, c.q);
            StructurePolynomial f = closure_fit(t);
            CHECK(f.p == presets::trilinear_f(c.h0, Rational(c.q)).p);
        }
    }

    TEST_CASE("trilinear conserved charges commute with the generators") {
        RealizedTriple t = realize_trilinear({10, 10, 10}, Rational(4), 1);
        for (int i = 0; i < t.sector.size(); ++i) {
            int up = t.plus.target[static_cast<std::size_t>(i)];
            int dn = t.minus.target[static_cast<std::size_t>(i)];
            // images stay inside the same charge sector by construction
            if (up >= 0) CHECK(t.n0[static_cast<std::size_t>(up)] ==
                               t.n0[static_cast<std::size_t>(i)] + Rational(1));
            if (dn >= 0) CHECK(t.n0[static_cast<std::size_t>(dn)] ==
                               t.n0[static_cast<std::size_t>(i)] - Rational(1));
        }
    }

    TEST_CASE("trilinear sector module: ladder zeros sit at 0 and eps + 3/2 (doubly)") {
        Rational h0(13, 4);  // eps = 2 h0 - 1 = 5/2
        RealizedTriple t = realize_trilinear({14, 14, 14}, h0, 0);
        auto vac = find_vacua(t);
        REQUIRE(vac.size() == 1);  // the lowering kernel in one charge sector
        LoweringModule mod = sector_to_module(t, vac[0]);
        REQUIRE(mod.finite());
        auto zeros = ladder_zero_positions(mod);
        REQUIRE(zeros.has_value());
        int total = 0;
        for (auto& [root, mult] : *zeros) total += mult;
        CHECK(total == 3);  // order-2 algebra: 3 annihilated positions
        Rational eps = Rational(2) * h0 - Rational(1);
        bool dbl = false;
        for (auto& [root, mult] : *zeros)
            if (root == eps + Rational(3, 2) && mult == 2) dbl = true;
        CHECK(dbl);
    }

    TEST_CASE("multiphoton: (1,1) reduces to the pair ladder") {
        RealizedTriple t = realize_multiphoton(1, 1, {10, 10}, Rational(3, 2));
        // charge (n0 + n1)/2 = 3/2: chain n0 + n1 = 3
        CHECK(t.sector.size() == 4);
        StructurePolynomial f = closure_fit(t);
        CHECK(f.degree() == 1);
    }

    TEST_CASE("multiphoton degree law: closure degree m + n - 1") {
        struct Case {
            int m, n;
            Rational h0;
        };
        for (const Case& c : {Case{1, 1, Rational(4)}, Case{1, 2, Rational(4)},
                              Case{2, 1, Rational(4)}, Case{2, 2, Rational(4)},
                              Case{1, 3, Rational(4)}}) {
            RealizedTriple t = realize_multiphoton(c.m, c.n, {30, 30}, c.h0);
            REQUIRE(interior_states(t).size() >= static_cast<std::size_t>(c.m + c.n + 1));
            CHECK(closure_fit(t).degree() == c.m + c.n - 1);
        }
    }

    TEST_CASE("Higgs-type (2,2) sector: two lowering vacua, four ladder zeros") {
        // charge (n0+n1)/4 = 3: chain n0 + n1 = 12, split into two parity orbits
        RealizedTriple t = realize_multiphoton(2, 2, {14, 14}, Rational(3));
        CHECK(closure_fit(t).degree() == 3);
        auto vac = find_vacua(t);
        REQUIRE(vac.size() == 2);
        for (int v : vac) {
            LoweringModule mod = sector_to_module(t, v);
            REQUIRE(mod.finite());
            auto zeros = ladder_zero_positions(mod);
            REQUIRE(zeros.has_value());
            int total = 0;
            for (auto& [root, mult] : *zeros) total += mult;
            CHECK(total == 4);  // order-3 algebra: n + 1 = 4 annihilated positions
        }
    }

    TEST_CASE("empty sectors are rejected") {
        CHECK_THROWS_AS(realize_trilinear({6, 6, 6}, Rational(1, 3), 0), EmptySector);
        CHECK_THROWS_AS(realize_multiphoton(1, 2, {8, 8}, Rational(1, 7)), EmptySector);
    }

    TEST_CASE("Dicke sectors close at low polynomial degree") {
        // one atom, one-photon flips: two-state sectors, affine diagonal
        RealizedTriple t1 = realize_dicke(1, 1, 12, Rational(9, 2));
        CHECK(t1.sector.size() == 2);
        CHECK(closure_fit(t1).degree() <= 1);
        // two atoms: three-state sectors, quadratic diagonal
        RealizedTriple t2 = realize_dicke(2, 1, 14, Rational(5));
        CHECK(t2.sector.size() == 3);
        CHECK(closure_fit(t2).degree() <= 2);
        // generators preserve the sector (block structure)
        for (int i = 0; i < t2.sector.size(); ++i) {
            int up = t2.plus.target[static_cast<std::size_t>(i)];
            if (up >= 0) CHECK(t2.n0[static_cast<std::size_t>(up)] ==
                               t2.n0[static_cast<std::size_t>(i)] + Rational(1));
        }
        // three-photon flips stay polynomial as well
        RealizedTriple t3 = realize_dicke(2, 3, 20, Rational(8));
        CHECK(closure_fit(t3).degree() <= 4);
        CHECK(!dicke_sector_charges(2, 1, 6).empty());
    }

    TEST_CASE("corrupted adjoint structure is reported as non-closing") {
        RealizedTriple t = realize_pair({8, 8});
        // redirect one lowering image
        for (int i = 0; i < t.sector.size(); ++i) {
            if (t.minus.target[static_cast<std::size_t>(i)] >= 0) {
                t.minus.target[static_cast<std::size_t>(i)] = i;  // loop back to itself
                break;
            }
        }
        CHECK_THROWS_AS(closure_fit(t), NotDiagonal);
    }

    TEST_CASE("degree cap turns an honest fit into NoPolynomialFit") {
        RealizedTriple t = realize_trilinear({10, 10, 10}, Rational(13, 4), 0);
        CHECK_THROWS_AS(closure_fit(t, 1), NoPolynomialFit);
    }

    TEST_CASE("sector_to_module rejects non-vacuum states") {
        RealizedTriple t = realize_pair({6, 6});
        int non_vacuum = -1;
        for (int i = 0; i < t.sector.size(); ++i) {
            if (!t.minus.sqamp[static_cast<std::size_t>(i)].is_zero()) {
                non_vacuum = i;
                break;
            }
        }
        REQUIRE(non_vacuum >= 0);
        CHECK_THROWS(sector_to_module(t, non_vacuum));
    }

    TEST_CASE("one-dimensional orbit from a doubly annihilated state") {
        // trilinear sector with a single state: (0, nb, nc) where J+ and J- both
        // vanish or truncate immediately
        RealizedTriple t = realize_trilinear({0, 4, 4}, Rational(5, 4), 0);
        auto vac = find_vacua(t);
        REQUIRE(!vac.empty());
        LoweringModule mod = sector_to_module(t, vac[0]);
        CHECK(mod.dim() == 1);
    }

    TEST_CASE("sector export formats") {
        RealizedTriple t = realize_pair({3, 3});
        std::string j = sector_to_json(t);
        CHECK(j.find("\"recipe\"") != std::string::npos);
        std::string csv = sparse_to_csv(t, true);
        CHECK(csv.rfind("row,col,squared_amplitude\n", 0) == 0);
    }

    TEST_CASE("in-sector series equals the abstract module series") {
        // oracle equivalence at the coefficient level, pair q = 2 sector
        RealizedTriple t = realize_pair({40, 40});
        int vacuum = -1;
        for (int v : find_vacua(t)) {
            auto& st = t.sector.basis[static_cast<std::size_t>(v)];
            if (st[0] == 2 && st[1] == 0) vacuum = v;
        }
        REQUIRE(vacuum >= 0);
        LoweringModule mod = sector_to_module(t, vacuum);
        CoherentState abstract = annihilation_series(mod, {1.3, -0.4});

        // walk the Fock orbit directly
        std::vector<std::complex<double>> direct{1.0};
        int cur = vacuum;
        std::complex<double> c(1.0, 0.0);
        std::complex<double> alpha(1.3, -0.4);
        while (t.plus.target[static_cast<std::size_t>(cur)] >= 0) {
            int next = t.plus.target[static_cast<std::size_t>(cur)];
            c *= alpha / std::sqrt(t.minus.sqamp[static_cast<std::size_t>(next)].to_double());
            direct.push_back(c);
            cur = next;
        }
        double n2 = 0.0;
        for (auto& z : direct) n2 += std::norm(z);
        double fid = 0.0;
        std::complex<double> ov(0.0, 0.0);
        for (std::size_t i = 0; i < direct.size() && i < abstract.coeffs.size(); ++i)
            ov += std::conj(direct[i] / std::sqrt(n2)) * abstract.coeffs[i];
        fid = std::norm(ov);
        CHECK(fid >= 1.0 - 1e-12);
    }
}
