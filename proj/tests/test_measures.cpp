#include <doctest.h>

#include <cmath>

#include "polycs/errors.hpp"
#include "polycs/measures.hpp"
#include "polycs/specialfn.hpp"

using namespace polycs;

namespace {

// module with s[m] = m (harmonic-oscillator ladder), any weight
LoweringModule harmonic_module(int cutoff) {
    CasimirPolynomial g{RationalPoly({Rational(0), Rational(-1)})};  // g = -x
    return build_module(g, Rational(0), cutoff);
}

}  // namespace

TEST_SUITE("measures") {
    TEST_CASE("moment recursion rho_n = rho_{n-1} s[n] holds exactly") {
        LoweringModule bg = presets::bg_module(Rational(-1), 16);
        MomentSequence seq = moment_sequence(bg, 12);
        REQUIRE(seq.exact.size() == 13);
        for (int n = 1; n <= 12; ++n)
            CHECK(seq.exact[static_cast<std::size_t>(n)] ==
                  seq.exact[static_cast<std::size_t>(n) - 1] * bg.s[static_cast<std::size_t>(n)]);
        CHECK(seq.values[0] == 1.0);
    }

    TEST_CASE("BG moments are the Gamma ratio n! (n+1)! at phi = -1") {
        MomentSequence seq = moment_sequence(presets::bg_module(Rational(-1), 12), 8);
        Rational fact(1), fact1(1);
        for (int n = 1; n <= 8; ++n) {
            fact *= Rational(n);
            fact1 *= Rational(n + 1);
            CHECK(seq.exact[static_cast<std::size_t>(n)] == fact * fact1);
        }
    }

    TEST_CASE("quadratic moments are triple factorial-ratio products at eps = -3/2") {
        // rho_n = prod k(k+1)(k+2) = n! * (n+1)!/1! * (n+2)!/2!
        MomentSequence seq = moment_sequence(presets::quadratic_module(Rational(-3, 2), 12), 6);
        Rational f0(1), f1(1), f2(1);
        for (int n = 1; n <= 6; ++n) {
            f0 *= Rational(n);
            f1 *= Rational(n + 1);
            f2 *= Rational(n + 2);
            CHECK(seq.exact[static_cast<std::size_t>(n)] == f0 * f1 * f2);
        }
    }

    TEST_CASE("moment sequence auto-extends through the generator") {
        LoweringModule bg = presets::bg_module(Rational(-1, 2), 4);
        MomentSequence seq = moment_sequence(bg, 10);
        CHECK(seq.values.size() == 11);
        CHECK_THROWS(moment_sequence(presets::su2_module(Rational(1), 8), 5));
    }

    TEST_CASE("Gaussian calibration: sigma = exp(-r^2) has moments n!") {
        MomentSequence seq = moment_sequence(harmonic_module(12), 6);
        double err = verify_moments([](double r) { return std::exp(-r * r); }, seq, 6, 1e-12);
        CHECK(err < 1e-8);
    }

    TEST_CASE("the moment-matching BG density reproduces the ladder moments") {
        for (Rational phi : {Rational(-1, 2), Rational(-1), Rational(-3, 2)}) {
            MomentSequence seq = moment_sequence(presets::bg_module(phi, 12), 8);
            double err = verify_moments([&](double r) { return bg_moment_density(r, phi); }, seq,
                                        8, 1e-10);
            CHECK(err < 1e-6);
        }
    }

    TEST_CASE("bg_density substitution and behavior") {
        // at phi = -1/2 the ansatz is r^2 K_0(2r)
        Rational phi(-1, 2);
        for (double r : {0.1, 0.7, 2.0, 5.0}) {
            CHECK(bg_density(r, phi) ==
                  doctest::Approx(r * r * bessel_k(0.0, 2.0 * r)).epsilon(1e-12));
            CHECK(bg_density(r, phi) > 0.0);
            CHECK(bg_density(r, Rational(-1)) > 0.0);
        }
        // exponential decay at large r (roughly e^{-2r} with a polynomial factor)
        CHECK(bg_density(20.0, phi) < 1e-13 * bg_density(1.0, phi));
        CHECK_THROWS_AS(bg_density(0.0, phi), DomainViolation);
        CHECK_THROWS_AS(bg_density(-1.0, phi), DomainViolation);
        CHECK_THROWS_AS(bg_density(1.0, Rational(1)), DomainViolation);
    }

    TEST_CASE("the r^(-2phi+1) K_(1/2+phi) ansatz does not carry the ladder moments") {
        // its moments are proportional to Gamma(n + 5/4 - 3phi/2) Gamma(n + 7/4 - phi/2),
        // which is a different Gamma pattern than Gamma(n+1) Gamma(n - 2phi);
        // the matching density is bg_moment_density
        Rational phi(-1);
        MomentSequence seq = moment_sequence(presets::bg_module(phi, 12), 4);
        double err =
            verify_moments([&](double r) { return bg_density(r, phi); }, seq, 4, 1e-10);
        CHECK(err > 0.5);
        // and the analytic first moment of the ansatz itself: (9/4)(11/4)
        auto density = [&](double r) { return bg_density(r, phi); };
        double q0 = quad_semi_infinite([&](double r) { return density(r) * r; }, 1e-11);
        double q1 = quad_semi_infinite([&](double r) { return density(r) * r * r * r; }, 1e-11);
        CHECK(q1 / q0 == doctest::Approx(99.0 / 16.0).epsilon(1e-8));
    }

    TEST_CASE("zero-mass candidate densities are rejected") {
        MomentSequence seq = moment_sequence(presets::bg_module(Rational(-1), 8), 3);
        CHECK_THROWS(verify_moments([](double) { return 0.0; }, seq, 3, 1e-10));
    }

    TEST_CASE("moment table CSV") {
        MomentSequence seq = moment_sequence(presets::bg_module(Rational(-1), 8), 3);
        std::string csv = moments_to_csv(seq);
        CHECK(csv.rfind("n,exact,value,quadrature,rel_error\n", 0) == 0);
        CHECK(csv.find("\n1,2,") != std::string::npos);  // rho_1 = 2 at phi = -1
    }
}
