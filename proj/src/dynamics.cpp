#include "epdiff/dynamics.hpp"

#include <cmath>
#include <string>

#include "epdiff/spectral.hpp"

namespace epdiff {

namespace {

void require_eta_above_floor(const ScalarField& eta, const char* what) {
    const double m = min_value(eta);
    if (!(m > kEtaFloor))
        throw EtaFloorViolation(std::string(what) + ": min(eta) = " + std::to_string(m) +
                                " is at or below the floor " + std::to_string(kEtaFloor));
}

ScalarField maybe_dealias(ScalarField f, bool on) { return on ? dealias(f) : f; }

void require_dim(const VectorField& v, int dim, const char* what) {
    if (v.grid()->dim() != dim)
        throw std::invalid_argument(std::string(what) + ": needs a " + std::to_string(dim) +
                                    "-D grid");
}

} // namespace

SWState make_sw_state(VectorField u, ScalarField eta, double g) {
    require_same_grid(u, eta, "SWState");
    require_eta_above_floor(eta, "SWState");
    return SWState{std::move(u), std::move(eta), g};
}

EPDiffState make_epdiff_state(VectorField m, OperatorParams op) {
    if (m.grid()->dim() != op.dim)
        throw std::invalid_argument("EPDiffState: operator dim does not match grid dim");
    for (const auto& c : m.components)
        if (!all_finite(c)) throw std::invalid_argument("EPDiffState: m has non-finite values");
    return EPDiffState{std::move(m), op};
}

SWTendency sw_rhs_primitive(const SWState& s, bool dealias_products) {
    require_eta_above_floor(s.eta, "sw_rhs_primitive");
    const int dim = s.u.dim();

    std::vector<ScalarField> du;
    for (int i = 0; i < dim; ++i) {
        ScalarField adv = zeros(s.u.grid());
        for (int j = 0; j < dim; ++j) {
            const ScalarField t = maybe_dealias(s.u[j] * deriv(s.u[i], j), dealias_products);
            for (std::size_t k = 0; k < adv.size(); ++k) adv[k] += t[k];
        }
        const ScalarField geta = deriv(s.eta, i);
        for (std::size_t k = 0; k < adv.size(); ++k) adv[k] = -(adv[k] + s.g * geta[k]);
        du.push_back(std::move(adv));
    }

    ScalarField deta = zeros(s.u.grid());
    for (int j = 0; j < dim; ++j) {
        const ScalarField t = deriv(maybe_dealias(s.eta * s.u[j], dealias_products), j);
        for (std::size_t k = 0; k < deta.size(); ++k) deta[k] -= t[k];
    }
    return SWTendency{VectorField(std::move(du)), std::move(deta)};
}

SWVarDerivatives sw_var_derivatives(const VectorField& m, const ScalarField& eta, double g) {
    require_same_grid(m, eta, "sw_var_derivatives");
    require_eta_above_floor(eta, "sw_var_derivatives");

    std::vector<ScalarField> u;
    for (int c = 0; c < m.dim(); ++c) u.push_back(m[c] / eta);
    VectorField dH_dm(std::move(u));

    ScalarField dH_deta(eta.grid);
    for (std::size_t i = 0; i < dH_deta.size(); ++i) {
        double usq = 0.0;
        for (int c = 0; c < dH_dm.dim(); ++c) usq += dH_dm[c][i] * dH_dm[c][i];
        dH_deta[i] = -0.5 * usq + g * eta[i];
    }
    return SWVarDerivatives{std::move(dH_dm), std::move(dH_deta)};
}

double sw_hamiltonian(const VectorField& m, const ScalarField& eta, double g) {
    require_same_grid(m, eta, "sw_hamiltonian");
    require_eta_above_floor(eta, "sw_hamiltonian");
    double acc = 0.0;
    for (std::size_t i = 0; i < eta.size(); ++i) {
        double msq = 0.0;
        for (int c = 0; c < m.dim(); ++c) msq += m[c][i] * m[c][i];
        acc += 0.5 * msq / eta[i] + 0.5 * g * eta[i] * eta[i];
    }
    return acc * eta.grid->cell_volume();
}

SWTendency sw_rhs_momentum(const VectorField& m, const ScalarField& eta, double g,
                           bool dealias_products) {
    const SWVarDerivatives vd = sw_var_derivatives(m, eta, g);
    if (m.grid()->dim() == 1) {
        auto [dm, deta] =
            poisson_apply_1d(m[0], eta, vd.dH_dm[0], vd.dH_deta, dealias_products);
        return SWTendency{VectorField({std::move(dm)}), std::move(deta)};
    }
    auto [dm, deta] = poisson_apply_nd(m, eta, vd.dH_dm, vd.dH_deta, dealias_products);
    return SWTendency{std::move(dm), std::move(deta)};
}

VectorField epdiff_recover_u(const EPDiffState& s) { return apply_Linv(s.m, s.op); }

EPDiffTendency epdiff_rhs_1d(const EPDiffState& s, bool dealias_products) {
    require_dim(s.m, 1, "epdiff_rhs_1d");
    const ScalarField u = apply_Linv(s.m[0], s.op);
    const ScalarField& m = s.m[0];
    ScalarField dm = -(deriv(maybe_dealias(m * u, dealias_products), 0) +
                       maybe_dealias(m * deriv(u, 0), dealias_products));
    return EPDiffTendency{VectorField({std::move(dm)})};
}

EPDiffTendency epdiff_rhs_advective(const EPDiffState& s, bool dealias_products) {
    require_dim(s.m, 2, "epdiff_rhs_advective");
    const VectorField u = epdiff_recover_u(s);
    const ScalarField divu = div(u);

    std::vector<ScalarField> dm;
    for (int i = 0; i < 2; ++i) {
        ScalarField acc = maybe_dealias(s.m[i] * divu, dealias_products);
        for (int j = 0; j < 2; ++j) {
            const ScalarField t1 = maybe_dealias(s.m[j] * deriv(u[j], i), dealias_products);
            const ScalarField t2 = maybe_dealias(u[j] * deriv(s.m[i], j), dealias_products);
            for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += t1[k] + t2[k];
        }
        dm.push_back(-acc);
    }
    return EPDiffTendency{VectorField(std::move(dm))};
}

EPDiffTendency epdiff_rhs_curl(const EPDiffState& s, bool dealias_products) {
    require_dim(s.m, 2, "epdiff_rhs_curl");
    const VectorField u = epdiff_recover_u(s);
    const ScalarField omega = curl_embedded(s.m);
    const ScalarField divu = div(u);
    const ScalarField um = maybe_dealias(dot(u, s.m), dealias_products);

    // u x (0, 0, omega) = (u1 omega, -u0 omega)
    ScalarField cross0 = maybe_dealias(u[1] * omega, dealias_products);
    ScalarField cross1 = -maybe_dealias(u[0] * omega, dealias_products);

    ScalarField dm0 = cross0 - deriv(um, 0) - maybe_dealias(s.m[0] * divu, dealias_products);
    ScalarField dm1 = cross1 - deriv(um, 1) - maybe_dealias(s.m[1] * divu, dealias_products);
    return EPDiffTendency{VectorField({std::move(dm0), std::move(dm1)})};
}

double epdiff_hamiltonian(const EPDiffState& s) {
    const VectorField u = epdiff_recover_u(s);
    return 0.5 * inner(s.m, u);
}

} // namespace epdiff
