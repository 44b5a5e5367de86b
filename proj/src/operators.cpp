#include "epdiff/operators.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

#include "epdiff/spectral.hpp"

namespace epdiff {

namespace {

std::function<void(const std::string&)>& warning_handler() {
    static std::function<void(const std::string&)> handler = [](const std::string& msg) {
        std::cerr << "warning: " << msg << "\n";
    };
    return handler;
}

void warn(const std::string& msg) { warning_handler()(msg); }

enum class Direction { Forward, Inverse };

ScalarField apply_symbol(const ScalarField& f, const OperatorParams& p, Direction dir) {
    const Grid& g = *f.grid;
    if (g.dim() != p.dim)
        throw std::invalid_argument("apply_L: operator dim does not match field grid dim");

    Spectrum s = forward(f);
    if (g.dim() == 1) {
        const auto& k = g.wavenumbers(0);
        for (std::size_t j = 0; j < g.size(0); ++j) {
            const double sym = yukawa_symbol(k[j] * k[j], p);
            s.coeff[j] *= (dir == Direction::Forward) ? sym : 1.0 / sym;
        }
    } else {
        const auto& kx = g.wavenumbers(0);
        const auto& ky = g.wavenumbers(1);
        for (std::size_t i = 0; i < g.size(0); ++i)
            for (std::size_t j = 0; j < g.size(1); ++j) {
                const double sym = yukawa_symbol(kx[i] * kx[i] + ky[j] * ky[j], p);
                s.coeff[g.index(i, j)] *= (dir == Direction::Forward) ? sym : 1.0 / sym;
            }
    }
    return inverse(s);
}

ScalarField maybe_dealias(ScalarField f, bool on) { return on ? dealias(f) : f; }

} // namespace

void set_warning_handler(std::function<void(const std::string&)> handler) {
    warning_handler() = std::move(handler);
}

OperatorParams make_operator_params(double alpha, double nu, int dim) {
    if (!(alpha > 0.0)) throw std::invalid_argument("OperatorParams: alpha must be positive");
    if (!(nu > 0.0)) throw std::invalid_argument("OperatorParams: nu must be positive");
    if (dim != 1 && dim != 2) throw std::invalid_argument("OperatorParams: dim must be 1 or 2");
    if (alpha * alpha > 1.0)
        warn("OperatorParams: alpha^2 = " + std::to_string(alpha * alpha) +
             " exceeds the usual modeling range alpha^2 <= 1");
    return OperatorParams{alpha, nu, dim};
}

double yukawa_symbol(double k_sq, const OperatorParams& p) {
    return std::pow(1.0 + p.alpha * p.alpha * k_sq, p.nu);
}

ScalarField apply_L(const ScalarField& u, const OperatorParams& p) {
    return apply_symbol(u, p, Direction::Forward);
}

VectorField apply_L(const VectorField& u, const OperatorParams& p) {
    std::vector<ScalarField> comps;
    for (const auto& c : u.components) comps.push_back(apply_L(c, p));
    return VectorField(std::move(comps));
}

ScalarField apply_Linv(const ScalarField& m, const OperatorParams& p) {
    return apply_symbol(m, p, Direction::Inverse);
}

VectorField apply_Linv(const VectorField& m, const OperatorParams& p) {
    std::vector<ScalarField> comps;
    for (const auto& c : m.components) comps.push_back(apply_Linv(c, p));
    return VectorField(std::move(comps));
}

VectorField grad(const ScalarField& f) {
    std::vector<ScalarField> comps;
    for (int a = 0; a < f.grid->dim(); ++a) comps.push_back(deriv(f, a));
    return VectorField(std::move(comps));
}

ScalarField div(const VectorField& v) {
    ScalarField out = deriv(v[0], 0);
    for (int a = 1; a < v.dim(); ++a) {
        const ScalarField d = deriv(v[a], a);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += d[i];
    }
    return out;
}

ScalarField curl_embedded(const VectorField& v) {
    if (v.dim() != 2) throw std::invalid_argument("curl_embedded: needs a 2-D vector field");
    return deriv(v[1], 0) - deriv(v[0], 1);
}

std::pair<ScalarField, ScalarField> poisson_apply_1d(const ScalarField& m,
                                                     const ScalarField& eta,
                                                     const ScalarField& a,
                                                     const ScalarField& b,
                                                     bool dealias_products) {
    require_same_grid(m, eta, "poisson_apply_1d");
    require_same_grid(m, a, "poisson_apply_1d");
    require_same_grid(m, b, "poisson_apply_1d");
    if (m.grid->dim() != 1)
        throw std::invalid_argument("poisson_apply_1d: needs a 1-D grid");

    ScalarField first = -(maybe_dealias(m * deriv(a, 0), dealias_products) +
                          deriv(maybe_dealias(m * a, dealias_products), 0) +
                          maybe_dealias(eta * deriv(b, 0), dealias_products));
    ScalarField second = -deriv(maybe_dealias(eta * a, dealias_products), 0);
    return {std::move(first), std::move(second)};
}

std::pair<VectorField, ScalarField> poisson_apply_nd(const VectorField& m,
                                                     const ScalarField& eta,
                                                     const VectorField& a,
                                                     const ScalarField& b,
                                                     bool dealias_products) {
    require_same_grid(m, eta, "poisson_apply_nd");
    require_same_grid(m, a, "poisson_apply_nd");
    if (m.grid()->dim() != 2)
        throw std::invalid_argument("poisson_apply_nd: needs a 2-D grid");
    const int dim = m.dim();

    std::vector<ScalarField> first;
    for (int i = 0; i < dim; ++i) {
        ScalarField acc = zeros(m.grid());
        for (int j = 0; j < dim; ++j) {
            const ScalarField t1 = maybe_dealias(m[j] * deriv(a[j], i), dealias_products);
            const ScalarField t2 = deriv(maybe_dealias(m[i] * a[j], dealias_products), j);
            for (std::size_t s = 0; s < acc.size(); ++s) acc[s] += t1[s] + t2[s];
        }
        const ScalarField t3 = maybe_dealias(eta * deriv(b, i), dealias_products);
        for (std::size_t s = 0; s < acc.size(); ++s) acc[s] = -(acc[s] + t3[s]);
        first.push_back(std::move(acc));
    }

    ScalarField second = zeros(m.grid());
    for (int j = 0; j < dim; ++j) {
        const ScalarField t = deriv(maybe_dealias(eta * a[j], dealias_products), j);
        for (std::size_t s = 0; s < second.size(); ++s) second[s] -= t[s];
    }
    return {VectorField(std::move(first)), std::move(second)};
}

} // namespace epdiff
