#include "epdiff/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace epdiff {

ScalarField deriv(const ScalarField& f, int axis) {
    const Grid& g = *f.grid;
    if (axis < 0 || axis >= g.dim())
        throw std::invalid_argument("deriv: axis out of range");

    Spectrum s = forward(f);
    const auto& k = g.wavenumbers(axis);
    if (g.dim() == 1) {
        const std::size_t n = g.size(0);
        for (std::size_t j = 0; j < n; ++j) {
            const double kj = (j == n / 2) ? 0.0 : k[j];
            s.coeff[j] *= std::complex<double>(0.0, kj);
        }
    } else {
        const std::size_t n0 = g.size(0), n1 = g.size(1);
        for (std::size_t i = 0; i < n0; ++i)
            for (std::size_t j = 0; j < n1; ++j) {
                const std::size_t idx = (axis == 0) ? i : j;
                const std::size_t n = (axis == 0) ? n0 : n1;
                const double kj = (idx == n / 2) ? 0.0 : k[idx];
                s.coeff[g.index(i, j)] *= std::complex<double>(0.0, kj);
            }
    }
    return inverse(s);
}

ScalarField dealias(const ScalarField& f) {
    const Grid& g = *f.grid;
    Spectrum s = forward(f);
    if (g.dim() == 1) {
        const long cut = static_cast<long>(g.size(0) / 3);
        for (std::size_t j = 0; j < g.size(0); ++j)
            if (std::labs(g.signed_index(0, j)) > cut) s.coeff[j] = 0.0;
    } else {
        const long cut0 = static_cast<long>(g.size(0) / 3);
        const long cut1 = static_cast<long>(g.size(1) / 3);
        for (std::size_t i = 0; i < g.size(0); ++i)
            for (std::size_t j = 0; j < g.size(1); ++j)
                if (std::labs(g.signed_index(0, i)) > cut0 ||
                    std::labs(g.signed_index(1, j)) > cut1)
                    s.coeff[g.index(i, j)] = 0.0;
    }
    return inverse(s);
}

ScalarField transform_roundtrip(const ScalarField& f) { return inverse(forward(f)); }

double spectral_energy(const ScalarField& f) {
    Spectrum s = forward(f);
    double sum = 0.0;
    for (const auto& c : s.coeff) sum += std::norm(c);
    return sum * f.grid->cell_volume() / static_cast<double>(f.grid->point_count());
}

double uniform01(std::mt19937_64& rng) {
    return std::ldexp(static_cast<double>(rng() >> 11), -53);
}

namespace {
// Box-Muller; avoids std::normal_distribution so streams are portable.
double normal01(std::mt19937_64& rng) {
    const double u1 = std::max(uniform01(rng), 1e-300);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}
} // namespace

ScalarField random_smooth_field(const GridPtr& g, std::mt19937_64& rng, int max_mode,
                                double amplitude) {
    if (max_mode < 1) throw std::invalid_argument("random_smooth_field: max_mode must be >= 1");
    ScalarField f(g);
    const double two_pi = 2.0 * std::numbers::pi;

    auto add_mode = [&](long kx, long ky) {
        const double a = normal01(rng);
        const double phase = two_pi * uniform01(rng);
        if (g->dim() == 1) {
            const double w = two_pi * static_cast<double>(kx) / g->length(0);
            for (std::size_t i = 0; i < g->size(0); ++i)
                f[i] += a * std::cos(w * g->coord(0, i) + phase);
        } else {
            const double wx = two_pi * static_cast<double>(kx) / g->length(0);
            const double wy = two_pi * static_cast<double>(ky) / g->length(1);
            for (std::size_t i = 0; i < g->size(0); ++i) {
                const double px = wx * g->coord(0, i) + phase;
                for (std::size_t j = 0; j < g->size(1); ++j)
                    f[g->index(i, j)] += a * std::cos(px + wy * g->coord(1, j));
            }
        }
    };

    if (g->dim() == 1) {
        for (long k = 1; k <= max_mode; ++k) add_mode(k, 0);
    } else {
        // kx > 0 takes all ky; kx == 0 takes ky > 0. Covers each mode pair once.
        for (long ky = 1; ky <= max_mode; ++ky) add_mode(0, ky);
        for (long kx = 1; kx <= max_mode; ++kx)
            for (long ky = -max_mode; ky <= max_mode; ++ky) add_mode(kx, ky);
    }

    const double peak = max_abs(f);
    if (peak > 0.0) {
        const double scale = amplitude / peak;
        for (double& v : f.values) v *= scale;
    }
    return f;
}

} // namespace epdiff
