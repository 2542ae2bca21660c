#include <cmath>

#include "doctest.h"

#include "spherigon/errors.hpp"
#include "spherigon/scalars.hpp"
#include "spherigon/tolerances.hpp"

using namespace spherigon;

TEST_SUITE("scalars") {

TEST_CASE("profile derives lambda and the domain endpoint") {
    ThicknessProfile prof(0.8);
    CHECK(prof.omega == 0.8);
    CHECK(std::abs(prof.lambda - std::tan(0.8)) < 1e-15);
    double expect = prof.lambda / (1.0 + std::sqrt(1.0 + prof.lambda * prof.lambda));
    CHECK(std::abs(prof.x_max - expect) < 1e-15);
    CHECK_THROWS_AS(ThicknessProfile(0.0), DomainError);
    CHECK_THROWS_AS(ThicknessProfile(kPi / 2), DomainError);
    CHECK_THROWS_AS(ThicknessProfile(-0.3), DomainError);
    CHECK_THROWS_AS(ThicknessProfile(2.0), DomainError);
}

TEST_CASE("g at pi/3 for the 60-degree profile") {
    // Frozen reference value, computed independently at high precision.
    ThicknessProfile prof(kPi / 3);
    CHECK(std::abs(scalar_g(kPi / 3, prof) - 0.39614349569663063890) < 1e-15);
}

TEST_CASE("g at pi/3 for lambda = 1 hits the closed-form root") {
    // For lambda = 1, cos(pi/3) = 1/2 makes g a quadratic root: (sqrt(17)-3)/4.
    ThicknessProfile prof(kPi / 4);
    double expect = (std::sqrt(17.0) - 3.0) / 4.0;
    CHECK(std::abs(scalar_g(kPi / 3, prof) - expect) < 1e-15);
}

TEST_CASE("g satisfies its defining relation") {
    for (double omega : {0.25, 0.8, 1.3}) {
        ThicknessProfile prof(omega);
        for (int k = 1; k <= 40; ++k) {
            double phi = kPi / 2 * k / 41.0;
            double g = scalar_g(phi, prof);
            CHECK(g > 0.0);
            CHECK(g < prof.x_max);
            double recovered = g * (1.0 + prof.lambda * g) / (prof.lambda - g);
            CHECK(std::abs(recovered - std::cos(phi)) < 1e-14);
        }
    }
}

TEST_CASE("g domain guards") {
    ThicknessProfile prof(0.8);
    CHECK_THROWS_AS(scalar_g(0.0, prof), DomainError);
    CHECK_THROWS_AS(scalar_g(kPi / 2, prof), DomainError);
    CHECK_THROWS_AS(scalar_g(-0.1, prof), DomainError);
    CHECK_THROWS_AS(scalar_g(3.0, prof), DomainError);
}

TEST_CASE("f, f1, f2 domain guards") {
    ThicknessProfile prof(0.8);
    CHECK_THROWS_AS(scalar_f(0.0, prof), DomainError);
    CHECK_THROWS_AS(scalar_f(prof.x_max, prof), DomainError);
    CHECK_THROWS_AS(scalar_f(-0.1, prof), DomainError);
    CHECK_THROWS_AS(scalar_f1(prof.x_max + 0.1, prof), DomainError);
    CHECK_THROWS_AS(scalar_f2(0.0, prof), DomainError);
}

TEST_CASE("f + f1 is a right angle across the domain") {
    for (double omega : {0.25, 0.8, 1.3}) {
        ThicknessProfile prof(omega);
        for (int k = 1; k <= 60; ++k) {
            double x = prof.x_max * k / 61.0;
            CHECK(std::abs(scalar_f(x, prof) + scalar_f1(x, prof) - kPi / 2) < 1e-14);
        }
    }
}

TEST_CASE("f increases, f2 decreases") {
    ThicknessProfile prof(0.8);
    double prev_f = -1.0;
    double prev_f2 = kPi;
    for (int k = 1; k <= 60; ++k) {
        double x = prof.x_max * k / 61.0;
        double f = scalar_f(x, prof);
        double f2 = scalar_f2(x, prof);
        CHECK(f > prev_f);
        CHECK(f2 < prev_f2);
        prev_f = f;
        prev_f2 = f2;
    }
}

TEST_CASE("endpoint identities via the extended-precision kernels") {
    for (double omega : {0.25, 0.8, 1.3}) {
        long double lambda = std::tan(static_cast<long double>(omega));
        long double xm = detail::x_max_ld(lambda);
        CHECK(std::abs(static_cast<double>(detail::f1_ld(xm, lambda))) < 1e-7);
        CHECK(std::abs(static_cast<double>(detail::f2_ld(xm, lambda))) < 1e-7);
        CHECK(std::abs(static_cast<double>(detail::f_ld(xm, lambda)) - kPi / 2) < 1e-7);
        // g vanishes at the right end of its domain.
        CHECK(std::abs(static_cast<double>(detail::g_ld(kPi / 2 - 1e-12L, lambda))) < 1e-11);
        // g approaches x_max at the left end.
        CHECK(std::abs(static_cast<double>(detail::g_ld(1e-9L, lambda) - xm)) < 1e-9);
    }
}

TEST_CASE("F composes f after g and falls") {
    ThicknessProfile prof(0.8);
    double prev = kPi;
    for (int k = 1; k <= 40; ++k) {
        double phi = kPi / 2 * k / 41.0;
        double F = scalar_F(phi, prof);
        CHECK(std::abs(F - scalar_f(scalar_g(phi, prof), prof)) < 5e-15);
        CHECK(F < prev);
        prev = F;
    }
}

TEST_CASE("closed-form derivative of F matches finite differences") {
    for (double omega : {0.25, 0.8, 1.3}) {
        ThicknessProfile prof(omega);
        for (double phi : {0.2, 0.5, 0.9, 1.3}) {
            double closed = F_prime_closed(phi, prof);
            CHECK(closed < 0.0);
            double h = 1e-5;
            double fd = (scalar_F(phi + h, prof) - scalar_F(phi - h, prof)) / (2 * h);
            CHECK(std::abs(fd - closed) < 1e-6 * std::abs(closed));
        }
    }
}

TEST_CASE("second differences of F are negative (concavity)") {
    ThicknessProfile prof(0.8);
    double h = 1e-4;
    for (double phi : {0.2, 0.5, 0.9, 1.3}) {
        double second = (scalar_F(phi + h, prof) - 2 * scalar_F(phi, prof) +
                         scalar_F(phi - h, prof)) /
                        (h * h);
        CHECK(second < 0.0);
    }
}

TEST_CASE("regular area frozen references") {
    // Independently computed at high precision and frozen.
    CHECK(std::abs(regular_area(3, kPi / 4) - 0.36763667592447359500) < 1e-14);
    CHECK(std::abs(regular_area(5, 0.8) - 0.46348270905258629806) < 1e-14);
}

TEST_CASE("regular area guards") {
    CHECK_THROWS_AS(regular_area(4, 0.8), EvenGon);
    CHECK_THROWS_AS(regular_area(2, 0.8), DomainError);
    CHECK_THROWS_AS(regular_area(1, 0.8), DomainError);
    CHECK_THROWS_AS(regular_area(5, 0.0), DomainError);
    CHECK_THROWS_AS(regular_area(5, kPi / 2), DomainError);
}

TEST_CASE("regular area grows with the vertex count") {
    double prev = 0.0;
    for (int n = 3; n <= 15; n += 2) {
        double s = regular_area(n, 0.8);
        CHECK(s > prev);
        prev = s;
    }
}

TEST_CASE("limit area caps the sequence and matches the 60-degree closed form") {
    for (double omega : {0.2, 0.8, 1.4}) {
        double lim = limit_area(omega);
        CHECK(regular_area(1001, omega) < lim);
        CHECK(lim - regular_area(1001, omega) < 1e-3);
    }
    CHECK(std::abs(limit_area(kPi / 3) - (2.0 - std::sqrt(3.0)) * kPi) < 1e-15);
    CHECK_THROWS_AS(limit_area(0.0), DomainError);
    CHECK_THROWS_AS(limit_area(kPi / 2), DomainError);
}

}  // TEST_SUITE
