#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "epdiff/dynamics.hpp"
#include "epdiff/field.hpp"

namespace epdiff {

enum class Model { SwPrimitive, SwMomentum, EpdiffAdvective, EpdiffCurl };
enum class InitialCondition { Peakon, Gaussian, RandomSmooth };

bool is_epdiff(Model m);

struct RunConfig {
    Model model = Model::EpdiffAdvective;
    int dim = 1;
    std::size_t nx = 0, ny = 0;
    double lx = 0.0, ly = 0.0;
    double alpha = 1.0;
    double nu = 1.0;
    double g = 9.81;
    double dt = 0.0;
    double t_end = 0.0;
    std::size_t output_every = 1;
    InitialCondition ic = InitialCondition::Gaussian;
    double ic_amplitude = 1.0;
    double ic_width = 1.0;
    double ic_center_x = 0.0;
    double ic_center_y = 0.0;
    std::uint64_t seed = 0;
    bool dealias = true;
    std::string output_dir;
};

/// Throws std::invalid_argument describing the first violated constraint.
void validate_config(const RunConfig& c);

struct DiagnosticsRecord {
    std::size_t step = 0;
    double t = 0.0;
    double hamiltonian = 0.0;
    std::optional<double> mass;       ///< integral of eta; absent for EPDiff runs
    double momentum_x = 0.0;          ///< integral of m, first component
    std::optional<double> momentum_y; ///< second component; absent in 1-D
    double max_speed = 0.0;
    double l2_m = 0.0;
};

/// Flat list of prognostic fields; the model adapter fixes the meaning
/// ([u, eta], [u, v, eta], [m, eta], [m], [mx, my], ...).
using FieldsState = std::vector<ScalarField>;
using RhsFn = std::function<FieldsState(const FieldsState&)>;

/// Classical 4-stage Runge-Kutta update of every field in the state.
FieldsState rk4_step(const FieldsState& state, const RhsFn& rhs, double dt);

struct Snapshot {
    std::size_t step;
    double t;
    std::vector<std::string> field_names;
    const FieldsState* fields;
};
using SnapshotSink = std::function<void(const Snapshot&)>;

struct RunAborted : std::runtime_error {
    std::size_t step;
    RunAborted(std::string msg, std::size_t s) : std::runtime_error(std::move(msg)), step(s) {}
};

struct RunResult {
    GridPtr grid;
    std::vector<DiagnosticsRecord> diagnostics;
    FieldsState final_state;
    std::vector<std::string> field_names;
};

/// Integrates the configured model from its initial condition to t_end,
/// emitting diagnostics (and snapshots, if a sink is given) every
/// output_every steps plus the first and last step. Deterministic for a
/// fixed config and seed. Throws RunAborted on non-finite fields and
/// propagates EtaFloorViolation from the momentum form.
RunResult run(const RunConfig& config, const SnapshotSink& sink = {});

/// Periodic peakon profile c * cosh((L/2 - d)/width) / cosh(L/(2 width))
/// at periodic distance d from the crest.
double peakon_profile(double d, double c, double width, double domain_length);

/// Peakon initial state on a 1-D grid: u from peakon_profile, m = L u with
/// the first-power operator at the profile width.
EPDiffState peakon_ic(const GridPtr& grid, double amplitude, double width, double center);

/// Step-size guideline 0.5 dx / max(|u| + sqrt(g max(eta))); pass g = 0 for
/// EPDiff runs.
double cfl_dt_guideline(const VectorField& u, const ScalarField* eta, double g);

} // namespace epdiff
