#include "epdiff/greens.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "epdiff/special.hpp"

namespace epdiff {

namespace {

constexpr double kImageTol = 1e-8;

ScalarField discrete_delta(const GridPtr& g) {
    ScalarField d(g);
    d[0] = 1.0 / g->cell_volume();
    return d;
}

ScalarField radius_field(const GridPtr& g) {
    ScalarField r(g);
    if (g->dim() == 1) {
        for (std::size_t i = 0; i < g->size(0); ++i)
            r[i] = g->periodic_distance(0, g->coord(0, i));
    } else {
        for (std::size_t i = 0; i < g->size(0); ++i) {
            const double dx = g->periodic_distance(0, g->coord(0, i));
            for (std::size_t j = 0; j < g->size(1); ++j) {
                const double dy = g->periodic_distance(1, g->coord(1, j));
                r[g->index(i, j)] = std::hypot(dx, dy);
            }
        }
    }
    return r;
}

void require_box_large_enough(const GreenParams& gp, const Grid& g) {
    const double image = std::exp(-g.min_length() / (2.0 * gp.op.alpha));
    if (!(image < kImageTol))
        throw std::invalid_argument(
            "greens: box too small relative to alpha; exp(-L/(2 alpha)) = " +
            std::to_string(image) + " must be < 1e-8");
}

} // namespace

GreenParams make_green_params(const OperatorParams& op) {
    return GreenParams{op, op.nu - static_cast<double>(op.dim) / 2.0};
}

double green_scalar(double r, const GreenParams& gp) {
    if (!(r > 0.0))
        throw std::invalid_argument("green_scalar: r must be positive");
    const double n = static_cast<double>(gp.op.dim);
    const double nu = gp.op.nu;
    const double alpha = gp.op.alpha;
    const double pref = std::pow(2.0, n / 2.0 - nu) /
                        (std::pow(2.0 * std::numbers::pi * alpha, n / 2.0) *
                         std::pow(alpha, nu) * gamma_fn(nu));
    return pref * std::pow(r, gp.order) * bessel_k(gp.order, r / alpha);
}

ValidationReport green_validate(const GreenParams& gp, const GridPtr& grid,
                                double min_cells) {
    if (grid->dim() != gp.op.dim)
        throw std::invalid_argument("green_validate: grid dim does not match operator dim");
    require_box_large_enough(gp, *grid);

    const ScalarField g_spec = apply_Linv(discrete_delta(grid), gp.op);
    const ScalarField r = radius_field(grid);
    const double rmin = min_cells * grid->max_spacing();

    std::vector<double> kernel_vals, spec_vals;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] <= rmin) continue;
        kernel_vals.push_back(green_scalar(r[i], gp));
        spec_vals.push_back(g_spec[i]);
    }
    if (kernel_vals.empty())
        throw std::invalid_argument("green_validate: fit region is empty");

    double gg = 0.0, gG = 0.0;
    for (std::size_t i = 0; i < kernel_vals.size(); ++i) {
        gg += kernel_vals[i] * kernel_vals[i];
        gG += kernel_vals[i] * spec_vals[i];
    }
    const double c = gG / gg;

    double max_resid = 0.0, peak = 0.0;
    for (std::size_t i = 0; i < kernel_vals.size(); ++i) {
        max_resid = std::max(max_resid, std::fabs(c * kernel_vals[i] - spec_vals[i]));
        peak = std::max(peak, std::fabs(spec_vals[i]));
    }
    return ValidationReport{c, max_resid / peak, rmin, kernel_vals.size()};
}

GreenKernelTable make_green_kernel(const GreenParams& gp, const GridPtr& grid,
                                   double min_cells) {
    ValidationReport report = green_validate(gp, grid, min_cells);
    const ScalarField g_spec = apply_Linv(discrete_delta(grid), gp.op);
    const ScalarField r = radius_field(grid);
    ScalarField table(grid);
    for (std::size_t i = 0; i < r.size(); ++i)
        table[i] = (r[i] > 0.0) ? report.constant_ratio * green_scalar(r[i], gp) : g_spec[0];
    return GreenKernelTable{std::move(table), report};
}

ScalarField green_convolve(const ScalarField& m, const GreenKernelTable& kernel) {
    require_same_grid(m, kernel.table, "green_convolve");
    const Grid& g = *m.grid;
    ScalarField out(m.grid);
    const double dv = g.cell_volume();
    if (g.dim() == 1) {
        const long n = static_cast<long>(g.size(0));
        for (long i = 0; i < n; ++i) {
            double acc = 0.0;
            for (long j = 0; j < n; ++j)
                acc += kernel.table[static_cast<std::size_t>(((i - j) % n + n) % n)] * m[j];
            out[i] = acc * dv;
        }
    } else {
        const long n0 = static_cast<long>(g.size(0));
        const long n1 = static_cast<long>(g.size(1));
        for (long i0 = 0; i0 < n0; ++i0)
            for (long i1 = 0; i1 < n1; ++i1) {
                double acc = 0.0;
                for (long j0 = 0; j0 < n0; ++j0) {
                    const std::size_t r0 = static_cast<std::size_t>(((i0 - j0) % n0 + n0) % n0);
                    for (long j1 = 0; j1 < n1; ++j1) {
                        const std::size_t r1 =
                            static_cast<std::size_t>(((i1 - j1) % n1 + n1) % n1);
                        acc += kernel.table[g.index(r0, r1)] * m[g.index(j0, j1)];
                    }
                }
                out[g.index(i0, i1)] = acc * dv;
            }
    }
    return out;
}

VectorField green_convolve(const VectorField& m, const GreenParams& gp) {
    GreenKernelTable kernel = make_green_kernel(gp, m.grid());
    std::vector<ScalarField> comps;
    for (const auto& c : m.components) comps.push_back(green_convolve(c, kernel));
    return VectorField(std::move(comps));
}

} // namespace epdiff
