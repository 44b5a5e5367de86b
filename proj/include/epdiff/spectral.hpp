#pragma once

#include <cstdint>
#include <random>

#include "epdiff/fft.hpp"
#include "epdiff/field.hpp"

namespace epdiff {

/// Spectral derivative along an axis: mode k picks up a factor i*k, the
/// Nyquist mode's derivative coefficient is zeroed.
ScalarField deriv(const ScalarField& f, int axis);

/// 2/3-rule truncation: zeroes every mode whose signed index exceeds
/// floor(n/3) in magnitude on any axis.
ScalarField dealias(const ScalarField& f);

/// inverse(forward(f)); identity up to roundoff.
ScalarField transform_roundtrip(const ScalarField& f);

/// Spectral-side Parseval sum: (cell volume / N) * sum |F_k|^2.
double spectral_energy(const ScalarField& f);

/// Random band-limited field: modes with 0 < |index|_inf <= max_mode, random
/// phases and normally distributed amplitudes, scaled so max|f| ~ amplitude.
ScalarField random_smooth_field(const GridPtr& g, std::mt19937_64& rng, int max_mode,
                                double amplitude);

/// Uniform double in [0, 1) drawn reproducibly from the engine state.
double uniform01(std::mt19937_64& rng);

} // namespace epdiff
