#include "epdiff/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "epdiff/spectral.hpp"

namespace epdiff {

bool is_epdiff(Model m) {
    return m == Model::EpdiffAdvective || m == Model::EpdiffCurl;
}

void validate_config(const RunConfig& c) {
    if (c.dim != 1 && c.dim != 2)
        throw std::invalid_argument("config: dim must be 1 or 2");
    if (!(c.dt > 0.0)) throw std::invalid_argument("config: dt must be positive");
    if (!(c.t_end >= 0.0)) throw std::invalid_argument("config: t_end must be >= 0");
    if (c.output_every < 1) throw std::invalid_argument("config: output_every must be >= 1");
    if (c.nx < 4 || c.nx % 2 != 0)
        throw std::invalid_argument("config: nx must be even and >= 4");
    if (!(c.lx > 0.0)) throw std::invalid_argument("config: lx must be positive");
    if (c.dim == 2) {
        if (c.ny < 4 || c.ny % 2 != 0)
            throw std::invalid_argument("config: ny must be even and >= 4");
        if (!(c.ly > 0.0)) throw std::invalid_argument("config: ly must be positive");
    }
    if (is_epdiff(c.model)) {
        if (!(c.alpha > 0.0)) throw std::invalid_argument("config: alpha must be positive");
        if (!(c.nu > 0.0)) throw std::invalid_argument("config: nu must be positive");
    }
    if (c.ic == InitialCondition::Peakon) {
        if (c.dim != 1)
            throw std::invalid_argument("config: peakon initial condition needs dim = 1");
        if (!is_epdiff(c.model))
            throw std::invalid_argument("config: peakon initial condition needs an epdiff model");
    }
    if (!(c.ic_width > 0.0)) throw std::invalid_argument("config: ic_width must be positive");
}

FieldsState rk4_step(const FieldsState& state, const RhsFn& rhs, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("rk4_step: dt must be positive");
    auto combine = [](const FieldsState& a, double s, const FieldsState& b) {
        FieldsState out;
        out.reserve(a.size());
        for (std::size_t f = 0; f < a.size(); ++f) {
            ScalarField c(a[f].grid);
            for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[f][i] + s * b[f][i];
            out.push_back(std::move(c));
        }
        return out;
    };
    const FieldsState k1 = rhs(state);
    const FieldsState k2 = rhs(combine(state, 0.5 * dt, k1));
    const FieldsState k3 = rhs(combine(state, 0.5 * dt, k2));
    const FieldsState k4 = rhs(combine(state, dt, k3));

    FieldsState out;
    out.reserve(state.size());
    const double w = dt / 6.0;
    for (std::size_t f = 0; f < state.size(); ++f) {
        ScalarField c(state[f].grid);
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = state[f][i] + w * (k1[f][i] + 2.0 * k2[f][i] + 2.0 * k3[f][i] + k4[f][i]);
        out.push_back(std::move(c));
    }
    return out;
}

double peakon_profile(double d, double c, double width, double domain_length) {
    const double half = 0.5 * domain_length / width;
    return c * std::cosh(half - d / width) / std::cosh(half);
}

EPDiffState peakon_ic(const GridPtr& grid, double amplitude, double width, double center) {
    if (grid->dim() != 1) throw std::invalid_argument("peakon_ic: needs a 1-D grid");
    const double L = grid->length(0);
    ScalarField u(grid);
    for (std::size_t i = 0; i < grid->size(0); ++i) {
        const double d = grid->periodic_distance(0, grid->coord(0, i) - center);
        u[i] = peakon_profile(d, amplitude, width, L);
    }
    const OperatorParams op = make_operator_params(width, 1.0, 1);
    return make_epdiff_state(VectorField({apply_L(u, op)}), op);
}

double cfl_dt_guideline(const VectorField& u, const ScalarField* eta, double g) {
    const Grid& grid = *u.grid();
    double dx = grid.spacing(0);
    for (int a = 1; a < grid.dim(); ++a) dx = std::min(dx, grid.spacing(a));
    double wave = 0.0;
    if (eta != nullptr) wave = std::sqrt(g * std::max(0.0, *std::max_element(
                                                    eta->values.begin(), eta->values.end())));
    double speed = 0.0;
    for (std::size_t i = 0; i < u[0].size(); ++i) {
        double usq = 0.0;
        for (int c = 0; c < u.dim(); ++c) usq += u[c][i] * u[c][i];
        speed = std::max(speed, std::sqrt(usq) + wave);
    }
    if (speed == 0.0) return std::numeric_limits<double>::infinity();
    return 0.5 * dx / speed;
}

namespace {

ScalarField gaussian_bump(const GridPtr& g, double amplitude, double width, double cx,
                          double cy) {
    ScalarField f(g);
    if (g->dim() == 1) {
        for (std::size_t i = 0; i < g->size(0); ++i) {
            const double d = g->periodic_distance(0, g->coord(0, i) - cx);
            f[i] = amplitude * std::exp(-(d * d) / (width * width));
        }
    } else {
        for (std::size_t i = 0; i < g->size(0); ++i) {
            const double dx = g->periodic_distance(0, g->coord(0, i) - cx);
            for (std::size_t j = 0; j < g->size(1); ++j) {
                const double dy = g->periodic_distance(1, g->coord(1, j) - cy);
                f[g->index(i, j)] =
                    amplitude * std::exp(-(dx * dx + dy * dy) / (width * width));
            }
        }
    }
    return f;
}

struct ModelSetup {
    FieldsState state;
    std::vector<std::string> names;
    RhsFn rhs;
    std::function<DiagnosticsRecord(const FieldsState&, std::size_t, double)> diagnose;
};

DiagnosticsRecord diagnose_sw(const VectorField& m, const VectorField& u,
                              const ScalarField& eta, double g, std::size_t step, double t) {
    DiagnosticsRecord r;
    r.step = step;
    r.t = t;
    r.hamiltonian = sw_hamiltonian(m, eta, g);
    r.mass = integral(eta);
    r.momentum_x = integral(m[0]);
    if (m.dim() == 2) r.momentum_y = integral(m[1]);
    double speed = 0.0;
    for (std::size_t i = 0; i < eta.size(); ++i) {
        double usq = 0.0;
        for (int c = 0; c < u.dim(); ++c) usq += u[c][i] * u[c][i];
        speed = std::max(speed, usq);
    }
    r.max_speed = std::sqrt(speed);
    r.l2_m = std::sqrt(inner(m, m));
    return r;
}

VectorField state_vector(const FieldsState& s, int dim) {
    std::vector<ScalarField> comps(s.begin(), s.begin() + dim);
    return VectorField(std::move(comps));
}

ModelSetup make_setup(const RunConfig& c, const GridPtr& grid) {
    ModelSetup setup;
    const int dim = c.dim;
    std::mt19937_64 rng(c.seed);

    auto initial_velocity_eta = [&]() -> std::pair<VectorField, ScalarField> {
        VectorField u = zeros_vector(grid);
        ScalarField eta = constant_field(grid, 1.0);
        if (c.ic == InitialCondition::Gaussian) {
            const ScalarField bump =
                gaussian_bump(grid, c.ic_amplitude, c.ic_width, c.ic_center_x, c.ic_center_y);
            for (std::size_t i = 0; i < eta.size(); ++i) eta[i] += bump[i];
        } else { // RandomSmooth
            const ScalarField bump = random_smooth_field(grid, rng, 4, c.ic_amplitude);
            for (std::size_t i = 0; i < eta.size(); ++i) eta[i] += bump[i];
            for (int a = 0; a < dim; ++a)
                u[a] = random_smooth_field(grid, rng, 4, c.ic_amplitude);
        }
        return {std::move(u), std::move(eta)};
    };

    auto initial_epdiff_m = [&](const OperatorParams& op) -> VectorField {
        if (c.ic == InitialCondition::Peakon)
            return peakon_ic(grid, c.ic_amplitude, c.ic_width, c.ic_center_x).m;
        VectorField u = zeros_vector(grid);
        if (c.ic == InitialCondition::Gaussian)
            u[0] = gaussian_bump(grid, c.ic_amplitude, c.ic_width, c.ic_center_x, c.ic_center_y);
        else
            for (int a = 0; a < dim; ++a)
                u[a] = random_smooth_field(grid, rng, 4, c.ic_amplitude);
        return apply_L(u, op);
    };

    switch (c.model) {
    case Model::SwPrimitive: {
        auto [u, eta] = initial_velocity_eta();
        for (int a = 0; a < dim; ++a) setup.state.push_back(u[a]);
        setup.state.push_back(eta);
        setup.names = (dim == 1) ? std::vector<std::string>{"u", "eta"}
                                 : std::vector<std::string>{"u", "v", "eta"};
        const double g = c.g;
        const bool da = c.dealias;
        setup.rhs = [dim, g, da](const FieldsState& s) {
            SWState st{state_vector(s, dim), s[dim], g};
            SWTendency t = sw_rhs_primitive(st, da);
            FieldsState out;
            for (int a = 0; a < dim; ++a) out.push_back(std::move(t.dv[a]));
            out.push_back(std::move(t.deta));
            return out;
        };
        setup.diagnose = [dim, g](const FieldsState& s, std::size_t step, double t) {
            const VectorField u = state_vector(s, dim);
            const ScalarField& eta = s[dim];
            return diagnose_sw(eta * u, u, eta, g, step, t);
        };
        break;
    }
    case Model::SwMomentum: {
        auto [u, eta] = initial_velocity_eta();
        const VectorField m = eta * u;
        for (int a = 0; a < dim; ++a) setup.state.push_back(m[a]);
        setup.state.push_back(eta);
        setup.names = (dim == 1) ? std::vector<std::string>{"m", "eta"}
                                 : std::vector<std::string>{"mx", "my", "eta"};
        const double g = c.g;
        const bool da = c.dealias;
        setup.rhs = [dim, g, da](const FieldsState& s) {
            SWTendency t = sw_rhs_momentum(state_vector(s, dim), s[dim], g, da);
            FieldsState out;
            for (int a = 0; a < dim; ++a) out.push_back(std::move(t.dv[a]));
            out.push_back(std::move(t.deta));
            return out;
        };
        setup.diagnose = [dim, g](const FieldsState& s, std::size_t step, double t) {
            const VectorField m = state_vector(s, dim);
            const ScalarField& eta = s[dim];
            VectorField u = m;
            for (int a = 0; a < dim; ++a) u[a] = m[a] / eta;
            return diagnose_sw(m, u, eta, g, step, t);
        };
        break;
    }
    case Model::EpdiffAdvective:
    case Model::EpdiffCurl: {
        const OperatorParams op = make_operator_params(c.alpha, c.nu, dim);
        const VectorField m = initial_epdiff_m(op);
        for (int a = 0; a < dim; ++a) setup.state.push_back(m[a]);
        setup.names = (dim == 1) ? std::vector<std::string>{"m"}
                                 : std::vector<std::string>{"mx", "my"};
        const bool da = c.dealias;
        const bool curl_form = (c.model == Model::EpdiffCurl);
        setup.rhs = [dim, op, da, curl_form](const FieldsState& s) {
            EPDiffState st{state_vector(s, dim), op};
            EPDiffTendency t =
                (dim == 1) ? epdiff_rhs_1d(st, da)
                           : (curl_form ? epdiff_rhs_curl(st, da) : epdiff_rhs_advective(st, da));
            FieldsState out;
            for (int a = 0; a < dim; ++a) out.push_back(std::move(t.dm[a]));
            return out;
        };
        setup.diagnose = [dim, op](const FieldsState& s, std::size_t step, double t) {
            EPDiffState st{state_vector(s, dim), op};
            const VectorField u = epdiff_recover_u(st);
            DiagnosticsRecord r;
            r.step = step;
            r.t = t;
            r.hamiltonian = 0.5 * inner(st.m, u);
            r.momentum_x = integral(st.m[0]);
            if (dim == 2) r.momentum_y = integral(st.m[1]);
            double speed = 0.0;
            for (std::size_t i = 0; i < u[0].size(); ++i) {
                double usq = 0.0;
                for (int a = 0; a < dim; ++a) usq += u[a][i] * u[a][i];
                speed = std::max(speed, usq);
            }
            r.max_speed = std::sqrt(speed);
            r.l2_m = std::sqrt(inner(st.m, st.m));
            return r;
        };
        break;
    }
    }
    return setup;
}

} // namespace

RunResult run(const RunConfig& config, const SnapshotSink& sink) {
    validate_config(config);
    GridPtr grid = (config.dim == 1)
                       ? make_grid(1, {config.nx}, {config.lx})
                       : make_grid(2, {config.nx, config.ny}, {config.lx, config.ly});
    ModelSetup setup = make_setup(config, grid);

    const std::size_t nsteps =
        static_cast<std::size_t>(std::llround(config.t_end / config.dt));

    RunResult result;
    result.grid = grid;
    result.field_names = setup.names;

    auto emit = [&](const FieldsState& s, std::size_t step) {
        const double t = static_cast<double>(step) * config.dt;
        result.diagnostics.push_back(setup.diagnose(s, step, t));
        if (sink) {
            FieldsState view = s;
            std::vector<std::string> names = setup.names;
            // 1-D EPDiff snapshots also carry the recovered velocity.
            if (is_epdiff(config.model) && config.dim == 1) {
                const OperatorParams op = make_operator_params(config.alpha, config.nu, 1);
                view.push_back(apply_Linv(s[0], op));
                names.push_back("u");
            }
            Snapshot snap{step, t, names, &view};
            sink(snap);
        }
    };

    FieldsState state = std::move(setup.state);
    emit(state, 0);

    for (std::size_t step = 1; step <= nsteps; ++step) {
        state = rk4_step(state, setup.rhs, config.dt);
        for (const auto& f : state)
            if (!all_finite(f))
                throw RunAborted("run: non-finite values at step " + std::to_string(step), step);
        if (step % config.output_every == 0 || step == nsteps) emit(state, step);
    }

    result.final_state = std::move(state);
    return result;
}

} // namespace epdiff
