#include <doctest.h>

#include <cmath>
#include <numbers>

#include "epdiff/integrate.hpp"
#include "epdiff/spectral.hpp"
#include "oracles.hpp"

using namespace epdiff;

namespace {
constexpr double kPi = std::numbers::pi;
const double kTwoPi = 2.0 * kPi;
} // namespace

TEST_CASE("rk4 leaves the state unchanged under a zero tendency") {
    const GridPtr g = make_grid(1, {16}, {kTwoPi});
    FieldsState s{constant_field(g, 1.25)};
    const FieldsState out =
        rk4_step(s, [](const FieldsState& in) {
            return FieldsState{zeros(in[0].grid)};
        }, 0.1);
    CHECK(max_abs(out[0] - s[0]) == 0.0);
}

TEST_CASE("rk4 solves y' = -y to fifth-order local accuracy") {
    const GridPtr g = make_grid(1, {4}, {1.0});
    FieldsState s{constant_field(g, 1.0)};
    const RhsFn rhs = [](const FieldsState& in) { return FieldsState{-in[0]}; };
    const FieldsState out = rk4_step(s, rhs, 0.1);
    CHECK(std::fabs(out[0][0] - std::exp(-0.1)) < 1e-7);
}

TEST_CASE("rk4 rejects non-positive dt") {
    const GridPtr g = make_grid(1, {4}, {1.0});
    FieldsState s{zeros(g)};
    CHECK_THROWS_AS(rk4_step(s, [](const FieldsState& in) { return in; }, 0.0),
                    std::invalid_argument);
}

TEST_CASE("halving dt reduces the terminal error about sixteenfold") {
    RunConfig base;
    base.model = Model::SwPrimitive;
    base.dim = 1;
    base.nx = 128;
    base.lx = kTwoPi;
    base.g = 1.0;
    base.t_end = 0.5;
    base.output_every = 1u << 20;
    base.ic = InitialCondition::RandomSmooth;
    base.ic_amplitude = 0.1;
    base.ic_width = 1.0;
    base.seed = 3;

    auto terminal_u = [&](double dt) {
        RunConfig c = base;
        c.dt = dt;
        return run(c).final_state[0];
    };
    const ScalarField fine = terminal_u(0.0025);
    const double err_h = max_abs(terminal_u(0.02) - fine);
    const double err_h2 = max_abs(terminal_u(0.01) - fine);
    const double rate = err_h / err_h2;
    CHECK(rate > 12.0);
    CHECK(rate < 20.0);
}

TEST_CASE("run with t_end = 0 emits a single diagnostics record") {
    RunConfig c;
    c.model = Model::EpdiffAdvective;
    c.dim = 1;
    c.nx = 64;
    c.lx = kTwoPi;
    c.alpha = 0.5;
    c.nu = 1.0;
    c.dt = 0.01;
    c.t_end = 0.0;
    c.ic = InitialCondition::Gaussian;
    c.ic_amplitude = 0.5;
    c.ic_width = 0.5;
    c.ic_center_x = kPi;

    int snapshots = 0;
    const RunResult r = run(c, [&](const Snapshot&) { ++snapshots; });
    CHECK(r.diagnostics.size() == 1);
    CHECK(r.diagnostics[0].step == 0);
    CHECK(r.diagnostics[0].t == 0.0);
    CHECK(snapshots == 1);
}

TEST_CASE("identical config and seed reproduce diagnostics exactly") {
    RunConfig c;
    c.model = Model::SwMomentum;
    c.dim = 1;
    c.nx = 64;
    c.lx = kTwoPi;
    c.dt = 1e-3;
    c.t_end = 0.05;
    c.output_every = 10;
    c.ic = InitialCondition::RandomSmooth;
    c.ic_amplitude = 0.02;
    c.ic_width = 1.0;
    c.seed = 42;

    const RunResult a = run(c);
    const RunResult b = run(c);
    REQUIRE(a.diagnostics.size() == b.diagnostics.size());
    for (std::size_t i = 0; i < a.diagnostics.size(); ++i) {
        CHECK(a.diagnostics[i].hamiltonian == b.diagnostics[i].hamiltonian);
        CHECK(a.diagnostics[i].l2_m == b.diagnostics[i].l2_m);
        CHECK(*a.diagnostics[i].mass == *b.diagnostics[i].mass);
    }
}

TEST_CASE("smooth shallow-water run conserves mass and energy") {
    RunConfig c;
    c.model = Model::SwMomentum;
    c.dim = 1;
    c.nx = 256;
    c.lx = kTwoPi;
    c.g = 9.81;
    c.dt = 1e-3;
    c.t_end = 1.0;
    c.output_every = 100;
    c.ic = InitialCondition::RandomSmooth;
    c.ic_amplitude = 0.01;
    c.ic_width = 1.0;
    c.seed = 11;

    const RunResult r = run(c);
    const auto& first = r.diagnostics.front();
    const auto& last = r.diagnostics.back();
    CHECK(last.step == 1000);
    CHECK(std::fabs(*last.mass - *first.mass) / *first.mass < 1e-12);
    CHECK(std::fabs(last.hamiltonian - first.hamiltonian) / first.hamiltonian < 1e-8);
}

TEST_CASE("run aborts with the step index when the state blows up") {
    RunConfig c;
    c.model = Model::SwMomentum;
    c.dim = 1;
    c.nx = 256;
    c.lx = kTwoPi;
    c.g = 9.81;
    c.dt = 1.0; // two orders of magnitude past the stability limit
    c.t_end = 50.0;
    c.ic = InitialCondition::RandomSmooth;
    c.ic_amplitude = 0.1;
    c.ic_width = 1.0;

    bool aborted = false;
    try {
        run(c);
    } catch (const RunAborted& e) {
        aborted = true;
        CHECK(e.step >= 1);
        CHECK(std::string(e.what()).find("step") != std::string::npos);
    } catch (const EtaFloorViolation&) {
        aborted = true; // blow-up can also surface as a negative depth
    }
    CHECK(aborted);
}

TEST_CASE("peakon profile peaks at the crest and decays exponentially") {
    const GridPtr g = make_grid(1, {512}, {20.0});
    const double c = 1.3, width = 0.5, x0 = 5.0;
    const EPDiffState s = peakon_ic(g, c, width, x0);
    const ScalarField u = epdiff_recover_u(s)[0];

    // Crest value: x0 lies on a grid point (dx = 20/512 divides 5).
    const std::size_t i0 = 128;
    CHECK(g->coord(0, i0) == doctest::Approx(x0).epsilon(1e-14));
    CHECK(u[i0] == doctest::Approx(c).epsilon(1e-10));
    for (std::size_t i = 0; i < u.size(); ++i) CHECK(u[i] <= c * (1.0 + 1e-10));

    // Momentum concentrates at the crest: the |m| mass beyond 4 widths is
    // under 1% of the total.
    double total = 0.0, far = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double d = g->periodic_distance(0, g->coord(0, i) - x0);
        total += std::fabs(s.m[0][i]);
        if (d > 4.0 * width) far += std::fabs(s.m[0][i]);
    }
    CHECK(far / total < 0.01);
}

TEST_CASE("peakon profile approaches the exponential peakon on a large box") {
    const double width = 0.5, c = 1.0, L = 40.0 * width;
    const double at_one_width = peakon_profile(width, c, width, L);
    CHECK(std::fabs(at_one_width - c * std::exp(-1.0)) / (c * std::exp(-1.0)) < 1e-6);
}

TEST_CASE("peakon initial condition requires a 1-D grid") {
    const GridPtr g = make_grid(2, {16, 16}, {1.0, 1.0});
    CHECK_THROWS_AS(peakon_ic(g, 1.0, 0.2, 0.5), std::invalid_argument);
}

TEST_CASE("config validation rejects inconsistent requests") {
    RunConfig c;
    c.model = Model::SwPrimitive;
    c.dim = 1;
    c.nx = 64;
    c.lx = 1.0;
    c.dt = 0.1;
    c.t_end = 1.0;
    c.ic = InitialCondition::Peakon; // needs an epdiff model
    c.ic_amplitude = 1.0;
    c.ic_width = 0.1;
    CHECK_THROWS_AS(validate_config(c), std::invalid_argument);

    c.ic = InitialCondition::Gaussian;
    c.dt = -0.1;
    CHECK_THROWS_AS(validate_config(c), std::invalid_argument);

    c.dt = 0.1;
    c.output_every = 0;
    CHECK_THROWS_AS(validate_config(c), std::invalid_argument);
}

TEST_CASE("cfl guideline scales with grid spacing and wave speed") {
    const GridPtr g = make_grid(1, {128}, {kTwoPi});
    const VectorField u({constant_field(g, 1.0)});
    const ScalarField eta = constant_field(g, 1.0);
    const double dt = cfl_dt_guideline(u, &eta, 9.81);
    const double expected = 0.5 * g->spacing(0) / (1.0 + std::sqrt(9.81));
    CHECK(dt == doctest::Approx(expected).epsilon(1e-12));
}
