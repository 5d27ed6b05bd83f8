#include <doctest.h>

#include <cmath>

#include "polycs/errors.hpp"
#include "polycs/specialfn.hpp"

using namespace polycs;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_SUITE("specialfn") {
    TEST_CASE("log_gamma at known points") {
        CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
        CHECK(log_gamma(2.0) == doctest::Approx(0.0).epsilon(1e-14));
        CHECK(log_gamma(0.5) == doctest::Approx(std::log(std::sqrt(kPi))).epsilon(1e-14));
        CHECK(log_gamma(11.0) == doctest::Approx(std::log(3628800.0)).epsilon(1e-14));
    }

    TEST_CASE("log_gamma recursion identity") {
        for (double x = 0.5; x <= 100.0; x += 0.7) {
            double lhs = log_gamma(x + 1.0) - log_gamma(x) - std::log(x);
            CHECK(std::abs(lhs) < 1e-12);
        }
    }

    TEST_CASE("log_gamma across the contract window") {
        // spot values against the recursion ladder from a trusted start
        CHECK(log_gamma(1e-3) == doctest::Approx(std::log(1.0 / 1e-3) - 0.5772156649015329 * 1e-3)
                                     .epsilon(1e-6));
        CHECK(log_gamma(1e4) == doctest::Approx(82099.71749644238).epsilon(1e-13));
    }

    TEST_CASE("log_gamma poles and reflection") {
        CHECK_THROWS_AS(log_gamma(0.0), PoleAtNonpositiveInteger);
        CHECK_THROWS_AS(log_gamma(-3.0), PoleAtNonpositiveInteger);
        // Gamma(-1/2) = -2 sqrt(pi)
        auto s = log_gamma_signed(-0.5);
        CHECK(s.sign == -1);
        CHECK(s.log_abs == doctest::Approx(std::log(2.0 * std::sqrt(kPi))).epsilon(1e-13));
        // Gamma(-3/2) = 4 sqrt(pi)/3 > 0
        auto s2 = log_gamma_signed(-1.5);
        CHECK(s2.sign == 1);
        CHECK(s2.log_abs == doctest::Approx(std::log(4.0 * std::sqrt(kPi) / 3.0)).epsilon(1e-13));
    }

    TEST_CASE("bessel_k half-integer closed forms") {
        for (double x : {1e-3, 0.01, 0.3, 1.0, 2.3, 7.7, 20.0, 50.0}) {
            double k12 = std::sqrt(kPi / (2.0 * x)) * std::exp(-x);
            CHECK(bessel_k(0.5, x) == doctest::Approx(k12).epsilon(1e-11));
            CHECK(bessel_k(-0.5, x) == doctest::Approx(k12).epsilon(1e-11));
            CHECK(bessel_k(1.5, x) == doctest::Approx(k12 * (1.0 + 1.0 / x)).epsilon(1e-11));
            CHECK(bessel_k(2.5, x) ==
                  doctest::Approx(k12 * (1.0 + 3.0 / x + 3.0 / (x * x))).epsilon(1e-11));
        }
    }

    TEST_CASE("bessel_k frozen reference values") {
        CHECK(bessel_k(0.0, 1.0) == doctest::Approx(0.421024438240708333).epsilon(1e-12));
        CHECK(bessel_k(0.0, 2.0) == doctest::Approx(0.113893872749533436).epsilon(1e-12));
        CHECK(bessel_k(1.0, 1.0) == doctest::Approx(0.601907230197234575).epsilon(1e-12));
    }

    TEST_CASE("bessel_k recurrence") {
        // K_{v+1}(x) = K_{v-1}(x) + (2v/x) K_v(x)
        for (double v : {1.0, 2.5, 6.0}) {
            for (double x : {0.4, 2.3, 11.0}) {
                double lhs = bessel_k(v + 1.0, x);
                double rhs = bessel_k(v - 1.0, x) + (2.0 * v / x) * bessel_k(v, x);
                CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
            }
        }
    }

    TEST_CASE("bessel_k domain") {
        CHECK_THROWS_AS(bessel_k(0.0, 0.0), DomainViolation);
        CHECK_THROWS_AS(bessel_k(0.0, -1.0), DomainViolation);
        CHECK_THROWS_AS(bessel_k(11.0, 1.0), DomainViolation);
    }

    TEST_CASE("pfq basics") {
        CHECK(pfq({}, {0.7, 2.3}, {0.0, 0.0}).value.real() == doctest::Approx(1.0));
        // 0F1(; 1; 1) = I0(2), with I0 summed independently
        double i0 = 0.0, fact = 1.0;
        for (int k = 0; k <= 40; ++k) {
            if (k > 0) fact *= k;
            i0 += 1.0 / (fact * fact);
        }
        auto r = pfq({}, {1.0}, {1.0, 0.0});
        CHECK(r.converged);
        CHECK(r.value.real() == doctest::Approx(i0).epsilon(1e-14));
        // frozen value
        auto f2 = pfq({}, {2.0, 3.0}, {1.0, 0.0});
        CHECK(f2.value.real() == doctest::Approx(1.17372782096460769320).epsilon(1e-14));
    }

    TEST_CASE("pfq pole and domain guards") {
        CHECK_THROWS_AS(pfq({}, {-2.0, 1.0}, {0.5, 0.0}), BParameterPole);
        CHECK_THROWS_AS(pfq({1.0, 1.0}, {2.0}, {0.5, 0.0}), DomainViolation);
    }

    TEST_CASE("pfq tail bound over-estimates the truncation error") {
        auto r = pfq({}, {1.5, 2.5}, {2.0, 0.0}, 1e-9);
        REQUIRE(r.converged);
        // extend by 50 further terms from scratch at much higher accuracy
        auto precise = pfq({}, {1.5, 2.5}, {2.0, 0.0}, 1e-16);
        CHECK(std::abs(precise.value - r.value) <= r.bound + 1e-16 * std::abs(precise.value));
    }

    TEST_CASE("pfq partial sums are monotone for positive parameters") {
        // term-by-term positivity makes the sum monotone; probe via two tolerances
        auto loose = pfq({}, {1.0, 2.0}, {3.0, 0.0}, 1e-6);
        auto tight = pfq({}, {1.0, 2.0}, {3.0, 0.0}, 1e-15);
        CHECK(loose.value.real() <= tight.value.real() + 1e-12);
    }

    TEST_CASE("quad_semi_infinite on exponential moments") {
        auto e = [](double r) { return std::exp(-r); };
        CHECK(quad_semi_infinite(e, 1e-12) == doctest::Approx(1.0).epsilon(1e-11));
        auto r3 = [](double r) { return r * r * r * std::exp(-r); };
        CHECK(quad_semi_infinite(r3, 1e-12) == doctest::Approx(6.0).epsilon(1e-11));
        auto g = [](double r) { return r * std::exp(-r * r); };
        CHECK(quad_semi_infinite(g, 1e-12) == doctest::Approx(0.5).epsilon(1e-11));
    }

    TEST_CASE("quad_semi_infinite with a Bessel factor") {
        // int_0^inf r K0(2r) dr = 1/4
        auto f = [](double r) { return r < 350.0 ? r * bessel_k(0.0, 2.0 * r) : 0.0; };
        CHECK(quad_semi_infinite(f, 1e-10) == doctest::Approx(0.25).epsilon(1e-9));
    }

    TEST_CASE("quad_semi_infinite rejects divergent integrands") {
        auto f = [](double r) { return 1.0 / (1.0 + r); };
        CHECK_THROWS_AS(quad_semi_infinite(f, 1e-10), QuadratureNotConverged);
    }
}
