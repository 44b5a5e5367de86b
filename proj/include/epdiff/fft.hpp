#pragma once

#include <complex>
#include <vector>

#include "epdiff/field.hpp"

namespace epdiff {

/// Unnormalized DFT coefficients of a real field, same row-major mode layout
/// as the grid's wavenumber arrays. inverse() applies the 1/N factor and
/// keeps the real part.
struct Spectrum {
    GridPtr grid;
    std::vector<std::complex<double>> coeff;

    explicit Spectrum(GridPtr g) : grid(std::move(g)), coeff(grid->point_count()) {}
};

Spectrum forward(const ScalarField& f);
ScalarField inverse(const Spectrum& s);

} // namespace epdiff
