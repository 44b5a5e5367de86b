#pragma once

#include <functional>
#include <string>
#include <utility>

#include "epdiff/field.hpp"

namespace epdiff {

/// Parameters of the operator (I - alpha^2 Lap)^nu.
struct OperatorParams {
    double alpha = 1.0;
    double nu = 1.0;
    int dim = 1;
};

/// Validates alpha > 0, nu > 0, dim in {1,2}. alpha^2 > 1 is accepted but
/// reported through the warning handler (the usual modeling range keeps
/// alpha^2 <= 1).
OperatorParams make_operator_params(double alpha, double nu, int dim);

/// Replaceable sink for non-fatal diagnostics; default writes to stderr.
void set_warning_handler(std::function<void(const std::string&)> handler);

/// Forward Fourier multiplier (1 + alpha^2 k^2)^nu at squared wavenumber k_sq.
double yukawa_symbol(double k_sq, const OperatorParams& p);

ScalarField apply_L(const ScalarField& u, const OperatorParams& p);
VectorField apply_L(const VectorField& u, const OperatorParams& p);
ScalarField apply_Linv(const ScalarField& m, const OperatorParams& p);
VectorField apply_Linv(const VectorField& m, const OperatorParams& p);

VectorField grad(const ScalarField& f);
ScalarField div(const VectorField& v);
/// z-component of the curl of (v0, v1, 0): d v1/dx - d v0/dy. 2-D only.
ScalarField curl_embedded(const VectorField& v);

/// One application of the skew-adjoint operator matrix of the 1-D
/// momentum/surface system to a pair (a, b):
///   first  = -( m da/dx + d(m a)/dx + eta db/dx )
///   second = -  d(eta a)/dx
std::pair<ScalarField, ScalarField> poisson_apply_1d(const ScalarField& m,
                                                     const ScalarField& eta,
                                                     const ScalarField& a,
                                                     const ScalarField& b,
                                                     bool dealias_products = true);

/// n-D counterpart:
///   first_i = -( m_j d_i a_j + d_j(m_i a_j) + eta d_i b )
///   second  = -  d_j(eta a_j)
std::pair<VectorField, ScalarField> poisson_apply_nd(const VectorField& m,
                                                     const ScalarField& eta,
                                                     const VectorField& a,
                                                     const ScalarField& b,
                                                     bool dealias_products = true);

} // namespace epdiff
