#pragma once

#include <random>

#include "epdiff/field.hpp"

namespace epdiff::testing {

/// 4th-order centered finite difference along an axis, periodic stencil.
/// Independent of the spectral path; used as the derivative oracle.
ScalarField fd4_deriv(const ScalarField& f, int axis);

VectorField random_vector(const GridPtr& g, std::mt19937_64& rng, int max_mode, double amp);

/// base + band-limited perturbation, safely above the depth floor.
ScalarField random_depth(const GridPtr& g, std::mt19937_64& rng, double base, double amp);

} // namespace epdiff::testing
