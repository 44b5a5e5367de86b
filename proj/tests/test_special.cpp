#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "epdiff/special.hpp"

using namespace epdiff;

TEST_CASE("gamma anchors") {
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_fn(2.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
    CHECK_THROWS_AS(gamma_fn(0.0), std::invalid_argument);
    CHECK_THROWS_AS(gamma_fn(-1.3), std::invalid_argument);
}

TEST_CASE("gamma against high-precision reference values") {
    // Reference values computed with 40-digit arithmetic.
    const struct {
        double x, value;
    } cases[] = {
        {0.1, 9.5135076986687313},
        {3.7, 4.1706517837966040},
        {7.3, 1271.4236336639088},
        {12.0, 39916800.0},
        {19.5, 2.7724322986333718e16},
        {29.0, 3.0488834461171386e29},
    };
    for (const auto& c : cases)
        CHECK(std::fabs(gamma_fn(c.x) - c.value) / c.value < 1e-12);
}

TEST_CASE("bessel_k against high-precision reference values") {
    const struct {
        double order, z, value;
    } cases[] = {
        {0.0, 0.1, 2.4270690247020166},
        {0.0, 2.3, 0.079139933002093644},
        {0.3, 1.5, 0.21893795473217302},
        {0.5, 2.0, 0.11993777196806145},
        {1.0, 1.0, 0.60190723019723457},
        {1.5, 1.0, 0.92213700889578912},
        {2.6, 0.7, 10.180883827014956},
        {2.6, 7.7, 3.0377278160286023e-4},
        {3.0, 3.0, 0.12217037575718357},
        {4.5, 0.02, 5815698034.0584786},
        {5.7, 11.0, 2.5091246048608544e-5},
        {6.0, 0.5, 242711.83461983827},
        {6.0, 55.0, 3.0299538511248694e-25},
        {0.25, 1e-5, 38.220264538878944},
        {2.0, 1e-4, 1.9999999949999999e8},
        {1.0, 60.0, 1.4256320265171043e-27},
    };
    for (const auto& c : cases) {
        const double rel = std::fabs(bessel_k(c.order, c.z) - c.value) / c.value;
        INFO("order=", c.order, " z=", c.z);
        CHECK(rel < 1e-12);
    }
}

TEST_CASE("bessel_k half-integer closed forms") {
    // K_{1/2}(z) = sqrt(pi/(2z)) e^{-z}; each half-integer order adds a
    // polynomial factor.
    double worst = 0.0;
    for (double z = 0.1; z <= 20.0; z += 0.05) {
        const double k12 = std::sqrt(std::numbers::pi / (2.0 * z)) * std::exp(-z);
        const double k32 = k12 * (1.0 + 1.0 / z);
        const double k52 = k12 * (1.0 + 3.0 / z + 3.0 / (z * z));
        worst = std::max(worst, std::fabs(bessel_k(0.5, z) - k12) / k12);
        worst = std::max(worst, std::fabs(bessel_k(1.5, z) - k32) / k32);
        worst = std::max(worst, std::fabs(bessel_k(2.5, z) - k52) / k52);
    }
    CHECK(worst < 1e-10);

    CHECK(bessel_k(0.5, 2.0) ==
          doctest::Approx(std::sqrt(std::numbers::pi / 4.0) * std::exp(-2.0)).epsilon(1e-12));
    CHECK(bessel_k(1.5, 1.0) ==
          doctest::Approx(std::sqrt(std::numbers::pi / 2.0) * std::exp(-1.0) * 2.0)
              .epsilon(1e-12));
}

TEST_CASE("bessel_k is even in the order") {
    CHECK(bessel_k(-0.3, 1.5) == bessel_k(0.3, 1.5));
    CHECK(bessel_k(-2.6, 0.7) == bessel_k(2.6, 0.7));
}

TEST_CASE("bessel_k rejects arguments outside the envelope") {
    CHECK_THROWS_AS(bessel_k(6.5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(bessel_k(1.0, 1e-7), std::invalid_argument);
    CHECK_THROWS_AS(bessel_k(1.0, 61.0), std::invalid_argument);
    CHECK_THROWS_AS(bessel_k(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(bessel_k(1.0, -2.0), std::invalid_argument);
}

TEST_CASE("bessel_k agrees with the standard library implementation") {
    // Independent cross-check over a grid spanning both evaluation branches.
    double worst = 0.0;
    for (double order : {0.0, 0.2, 0.5, 0.9, 1.3, 2.0, 2.7, 3.5, 4.4, 5.2, 6.0})
        for (double z : {1e-4, 0.01, 0.3, 1.0, 1.9, 2.1, 4.0, 9.0, 25.0, 55.0}) {
            const double ref = std::cyl_bessel_k(order, z);
            worst = std::max(worst, std::fabs(bessel_k(order, z) - ref) / ref);
        }
    CHECK(worst < 1e-9);
}
