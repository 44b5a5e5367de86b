#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "epdiff/operators.hpp"
#include "epdiff/spectral.hpp"
#include "oracles.hpp"

using namespace epdiff;

namespace {
constexpr double kPi = std::numbers::pi;
const double kTwoPi = 2.0 * kPi;

std::function<double(double)> fn1d(double (*f)(double)) { return f; }
} // namespace

TEST_CASE("operator params validation and warning") {
    CHECK_THROWS_AS(make_operator_params(0.0, 1.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_operator_params(1.0, 0.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_operator_params(1.0, 1.0, 3), std::invalid_argument);

    int warnings = 0;
    set_warning_handler([&](const std::string&) { ++warnings; });
    const OperatorParams p = make_operator_params(1.5, 1.0, 1); // alpha^2 > 1
    CHECK(p.alpha == 1.5);
    CHECK(warnings == 1);
    make_operator_params(1.0, 1.0, 1);
    CHECK(warnings == 1);
    set_warning_handler([](const std::string&) {}); // silence for other tests
}

TEST_CASE("yukawa symbol values") {
    const OperatorParams any = make_operator_params(0.3, 2.7, 1);
    CHECK(yukawa_symbol(0.0, any) == 1.0);
    const OperatorParams p11 = make_operator_params(1.0, 1.0, 1);
    CHECK(yukawa_symbol(1.0, p11) == doctest::Approx(2.0).epsilon(1e-15));
    const OperatorParams p = make_operator_params(0.5, 1.5, 1);
    // (1 + 0.25 * 4)^1.5 = 2^1.5
    CHECK(yukawa_symbol(4.0, p) == doctest::Approx(std::pow(2.0, 1.5)).epsilon(1e-14));
}

TEST_CASE("apply_L on single modes") {
    const GridPtr g = make_grid(1, {64}, {kTwoPi});
    const OperatorParams p = make_operator_params(1.0, 1.0, 1);

    const ScalarField c = constant_field(g, 4.2);
    CHECK(max_abs(apply_L(c, p) - c) < 1e-13);

    const ScalarField s = sample(g, fn1d(std::sin));
    CHECK(max_abs(apply_L(s, p) - 2.0 * s) < 1e-12);

    // nu = 2 squares the symbol, which amplifies Nyquist-level FFT noise;
    // a short grid keeps that below the tolerance.
    const GridPtr g16 = make_grid(1, {16}, {kTwoPi});
    const ScalarField s16 = sample(g16, fn1d(std::sin));
    const OperatorParams p2 = make_operator_params(1.0, 2.0, 1);
    CHECK(max_abs(apply_L(s16, p2) - 4.0 * s16) < 1e-12);
}

TEST_CASE("apply_Linv inverts apply_L") {
    const GridPtr g = make_grid(1, {64}, {kTwoPi});
    const OperatorParams p = make_operator_params(1.0, 1.0, 1);

    const ScalarField s = sample(g, fn1d(std::sin));
    CHECK(max_abs(apply_Linv(2.0 * s, p) - s) < 1e-12);
    CHECK(max_abs(apply_Linv(zeros(g), p)) == 0.0);

    std::mt19937_64 rng(17);
    const ScalarField m = dealias(random_smooth_field(g, rng, 20, 1.0));
    CHECK(max_abs(apply_L(apply_Linv(m, p), p) - m) < 1e-12);
}

TEST_CASE("apply_L rejects dimension mismatch") {
    const GridPtr g = make_grid(1, {64}, {kTwoPi});
    const OperatorParams p2 = make_operator_params(1.0, 1.0, 2);
    CHECK_THROWS_AS(apply_L(zeros(g), p2), std::invalid_argument);
    CHECK_THROWS_AS(apply_Linv(zeros(g), p2), std::invalid_argument);
}

TEST_CASE("roundtrip holds over random operator parameters") {
    // 100 band-limited fields, 10 random (alpha, nu) pairs with alpha in
    // (0, 1], nu in (0, 4]. The band stays low so the symbol's Nyquist
    // amplification cannot swamp the 1e-12 budget.
    const GridPtr g2 = make_grid(2, {32, 32}, {kTwoPi, kTwoPi});
    const GridPtr g1 = make_grid(1, {256}, {kTwoPi});
    std::mt19937_64 rng(23);
    double worst = 0.0;
    for (int pair = 0; pair < 10; ++pair) {
        const double alpha = 0.05 + 0.95 * uniform01(rng);
        const double nu = 0.1 + 3.9 * uniform01(rng);
        for (int t = 0; t < 10; ++t) {
            const OperatorParams p2 = make_operator_params(alpha, nu, 2);
            const ScalarField f2 = random_smooth_field(g2, rng, 4, 1.0);
            worst = std::max(worst, max_abs(apply_Linv(apply_L(f2, p2), p2) - f2));
            const OperatorParams p1 = make_operator_params(alpha, nu, 1);
            const ScalarField f1 = random_smooth_field(g1, rng, 4, 1.0);
            worst = std::max(worst, max_abs(apply_Linv(apply_L(f1, p1), p1) - f1));
        }
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("grad, div and curl identities") {
    const GridPtr g = make_grid(2, {64, 64}, {kTwoPi, kTwoPi});

    CHECK(max_abs(grad(constant_field(g, 1.0))[0]) < 1e-14);
    CHECK(max_abs(grad(constant_field(g, 1.0))[1]) < 1e-14);

    // div(grad(sin x + cos y)) = -(sin x + cos y)
    const ScalarField f = sample(g, std::function<double(double, double)>(
                                        [](double x, double y) {
                                            return std::sin(x) + std::cos(y);
                                        }));
    CHECK(max_abs(div(grad(f)) + f) < 1e-12);

    std::mt19937_64 rng(29);
    const ScalarField h = random_smooth_field(g, rng, 8, 1.0);
    CHECK(max_abs(curl_embedded(grad(h))) < 1e-11);
}

TEST_CASE("curl_embedded needs two components") {
    const GridPtr g = make_grid(1, {16}, {kTwoPi});
    CHECK_THROWS_AS(curl_embedded(VectorField({zeros(g)})), std::invalid_argument);
}

TEST_CASE("poisson_apply_1d single-term activations") {
    const GridPtr g = make_grid(1, {64}, {kTwoPi});

    const ScalarField zero = zeros(g);
    const auto all_zero = poisson_apply_1d(zero, constant_field(g, 1.0), zero, zero);
    CHECK(max_abs(all_zero.first) == 0.0);
    CHECK(max_abs(all_zero.second) == 0.0);

    // m = 0, eta = h, a = 0, b = sin -> (-h cos x, 0)
    const double h = 0.7;
    const ScalarField b = sample(g, fn1d(std::sin));
    const auto out = poisson_apply_1d(zero, constant_field(g, h), zero, b);
    const ScalarField expected = sample(g, std::function<double(double)>([&](double x) {
                                            return -h * std::cos(x);
                                        }));
    CHECK(max_abs(out.first - expected) < 1e-12);
    CHECK(max_abs(out.second) < 1e-14);
}

TEST_CASE("poisson_apply_1d is skew-adjoint") {
    const GridPtr g = make_grid(1, {128}, {kTwoPi});
    std::mt19937_64 rng(31);
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
        const ScalarField m = random_smooth_field(g, rng, 4, 0.5);
        const ScalarField eta = testing::random_depth(g, rng, 2.0, 0.3);
        const ScalarField a = random_smooth_field(g, rng, 4, 1.0);
        const ScalarField b = random_smooth_field(g, rng, 4, 1.0);
        const ScalarField c = random_smooth_field(g, rng, 4, 1.0);
        const ScalarField d = random_smooth_field(g, rng, 4, 1.0);
        const auto Jcd = poisson_apply_1d(m, eta, c, d);
        const auto Jab = poisson_apply_1d(m, eta, a, b);
        const double lhs = inner(a, Jcd.first) + inner(b, Jcd.second);
        const double rhs = -(inner(Jab.first, c) + inner(Jab.second, d));
        worst = std::max(worst, std::fabs(lhs - rhs));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("poisson_apply_nd reduces to the 1-D operator on x-only fields") {
    const GridPtr g2 = make_grid(2, {64, 16}, {kTwoPi, 1.0});
    const GridPtr g1 = make_grid(1, {64}, {kTwoPi});
    std::mt19937_64 rng(37);

    // y-independent scalar fields, a = (a1, 0)
    const ScalarField m1 = random_smooth_field(g1, rng, 4, 0.5);
    const ScalarField eta1 = testing::random_depth(g1, rng, 2.0, 0.3);
    const ScalarField a1 = random_smooth_field(g1, rng, 4, 1.0);
    const ScalarField b1 = random_smooth_field(g1, rng, 4, 1.0);

    auto broadcast = [&](const ScalarField& f) {
        ScalarField out(g2);
        for (std::size_t i = 0; i < g2->size(0); ++i)
            for (std::size_t j = 0; j < g2->size(1); ++j) out[g2->index(i, j)] = f[i];
        return out;
    };

    const VectorField m2({broadcast(m1), zeros(g2)});
    const VectorField a2({broadcast(a1), zeros(g2)});
    const auto out2 = poisson_apply_nd(m2, broadcast(eta1), a2, broadcast(b1));
    const auto out1 = poisson_apply_1d(m1, eta1, a1, b1);

    double worst = 0.0;
    for (std::size_t i = 0; i < g2->size(0); ++i)
        for (std::size_t j = 0; j < g2->size(1); ++j) {
            worst = std::max(worst,
                             std::fabs(out2.first[0][g2->index(i, j)] - out1.first[i]));
            worst = std::max(worst,
                             std::fabs(out2.second[g2->index(i, j)] - out1.second[i]));
        }
    CHECK(worst < 1e-12);
    CHECK(max_abs(out2.first[1]) < 1e-12);
}

TEST_CASE("poisson operators reject mismatched grids") {
    const GridPtr a = make_grid(1, {64}, {kTwoPi});
    const GridPtr b = make_grid(1, {32}, {kTwoPi});
    CHECK_THROWS_AS(poisson_apply_1d(zeros(a), zeros(b), zeros(a), zeros(a)),
                    std::invalid_argument);
}
