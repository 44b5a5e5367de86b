#pragma once

#include <stdexcept>

#include "epdiff/field.hpp"
#include "epdiff/operators.hpp"

namespace epdiff {

/// Depths below this are treated as a dry state; the momentum-form and
/// variational operations divide by eta and refuse to proceed.
constexpr double kEtaFloor = 1e-8;

struct EtaFloorViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Velocity/surface-displacement state with gravity.
struct SWState {
    VectorField u;
    ScalarField eta;
    double g;
};

SWState make_sw_state(VectorField u, ScalarField eta, double g);

/// Momentum-density state; the velocity is recovered through the inverse
/// operator on every use, so m is the single source of truth.
struct EPDiffState {
    VectorField m;
    OperatorParams op;
};

EPDiffState make_epdiff_state(VectorField m, OperatorParams op);

/// d/dt of a (vector, scalar) pair: (du, deta) for the primitive form,
/// (dm, deta) for the momentum form.
struct SWTendency {
    VectorField dv;
    ScalarField deta;
};

struct EPDiffTendency {
    VectorField dm;
};

/// Primitive-form tendency: du = -(u . grad)u - g grad eta, deta = -div(eta u).
SWTendency sw_rhs_primitive(const SWState& s, bool dealias_products = true);

struct SWVarDerivatives {
    VectorField dH_dm;  ///< m / eta (the velocity)
    ScalarField dH_deta;///< -|u|^2/2 + g eta
};

SWVarDerivatives sw_var_derivatives(const VectorField& m, const ScalarField& eta, double g);

/// Discrete Hamiltonian: quadrature of |m|^2/(2 eta) + g eta^2 / 2.
double sw_hamiltonian(const VectorField& m, const ScalarField& eta, double g);

/// Momentum-form tendency, assembled as the Poisson operator applied to the
/// variational derivatives; equals (-d_j(m_i u_j) - g eta d_i eta, -d_j(eta u_j)).
SWTendency sw_rhs_momentum(const VectorField& m, const ScalarField& eta, double g,
                           bool dealias_products = true);

/// u = L^{-nu} m.
VectorField epdiff_recover_u(const EPDiffState& s);

/// 1-D: dm = -(m u)_x - m u_x.
EPDiffTendency epdiff_rhs_1d(const EPDiffState& s, bool dealias_products = true);

/// 2-D advective form: dm = -[(grad u)^T m + (u . grad) m + m div u].
EPDiffTendency epdiff_rhs_advective(const EPDiffState& s, bool dealias_products = true);

/// 2-D curl form: dm = u x curl m - grad(u . m) - m div u, with the cross
/// product realized through the (u, v, 0) embedding.
EPDiffTendency epdiff_rhs_curl(const EPDiffState& s, bool dealias_products = true);

/// Kinetic Hamiltonian: quadrature of m . u / 2 with u = L^{-nu} m.
double epdiff_hamiltonian(const EPDiffState& s);

} // namespace epdiff
