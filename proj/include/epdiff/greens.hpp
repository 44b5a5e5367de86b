#pragma once

#include <cstddef>

#include "epdiff/field.hpp"
#include "epdiff/operators.hpp"

namespace epdiff {

/// Operator parameters plus the derived Bessel order nu - n/2.
struct GreenParams {
    OperatorParams op;
    double order;
};

GreenParams make_green_params(const OperatorParams& op);

/// Closed-form radial kernel
///   G(r) = 2^(n/2-nu) / ((2 pi alpha)^(n/2) alpha^nu Gamma(nu))
///          * r^(nu-n/2) * K_{nu-n/2}(r/alpha),  r > 0.
/// The library's canonical kernel is the spectral inverse; this form is a
/// cross-check whose overall constant is measured, not assumed (see
/// green_validate).
double green_scalar(double r, const GreenParams& gp);

/// Outcome of fitting c * green_scalar against the spectral kernel
/// g_spec = apply_Linv(discrete delta) over radii r > fit_rmin.
struct ValidationReport {
    double constant_ratio;  ///< fitted c (g_spec ~= c * green_scalar)
    double max_shape_error; ///< max |c*G - g_spec| / max |g_spec| over the fit region
    double fit_rmin;        ///< inner radius of the fit region
    std::size_t fit_points; ///< number of grid points fitted
};

/// Requires exp(-L_min/(2 alpha)) < 1e-8 so periodic images are negligible.
/// min_cells sets the excluded core, fit_rmin = min_cells * max spacing.
ValidationReport green_validate(const GreenParams& gp, const GridPtr& grid,
                                double min_cells = 8.0);

/// Tabulated kernel for real-space convolution: c * green_scalar at every
/// periodic radius, with the origin cell taken from the spectral kernel.
struct GreenKernelTable {
    ScalarField table;
    ValidationReport report;
};

GreenKernelTable make_green_kernel(const GreenParams& gp, const GridPtr& grid,
                                   double min_cells = 8.0);

/// Direct real-space quadrature of u = G * m with the validated kernel table.
/// Matches apply_Linv to quadrature accuracy on smooth, concentrated m.
ScalarField green_convolve(const ScalarField& m, const GreenKernelTable& kernel);
VectorField green_convolve(const VectorField& m, const GreenParams& gp);

} // namespace epdiff
