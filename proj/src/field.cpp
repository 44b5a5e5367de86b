#include "epdiff/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace epdiff {

ScalarField::ScalarField(GridPtr g) : grid(std::move(g)), values(grid->point_count(), 0.0) {}

ScalarField::ScalarField(GridPtr g, std::vector<double> v)
    : grid(std::move(g)), values(std::move(v)) {
    if (values.size() != grid->point_count())
        throw std::invalid_argument("ScalarField: values count must equal grid point count");
}

VectorField::VectorField(std::vector<ScalarField> comps) : components(std::move(comps)) {
    if (components.empty())
        throw std::invalid_argument("VectorField: needs at least one component");
    const GridPtr& g = components.front().grid;
    if (static_cast<int>(components.size()) != g->dim())
        throw std::invalid_argument("VectorField: component count must equal grid dim");
    for (const auto& c : components)
        if (!c.grid->same_layout(*g))
            throw std::invalid_argument("VectorField: components must share one grid");
}

ScalarField zeros(const GridPtr& g) { return ScalarField(g); }

ScalarField constant_field(const GridPtr& g, double value) {
    ScalarField f(g);
    std::fill(f.values.begin(), f.values.end(), value);
    return f;
}

VectorField zeros_vector(const GridPtr& g) {
    std::vector<ScalarField> comps;
    for (int c = 0; c < g->dim(); ++c) comps.push_back(zeros(g));
    return VectorField(std::move(comps));
}

ScalarField sample(const GridPtr& g, const std::function<double(double)>& f) {
    if (g->dim() != 1) throw std::invalid_argument("sample: 1-D functor on non-1-D grid");
    ScalarField out(g);
    for (std::size_t i = 0; i < g->size(0); ++i) out[i] = f(g->coord(0, i));
    return out;
}

ScalarField sample(const GridPtr& g, const std::function<double(double, double)>& f) {
    if (g->dim() != 2) throw std::invalid_argument("sample: 2-D functor on non-2-D grid");
    ScalarField out(g);
    for (std::size_t i = 0; i < g->size(0); ++i)
        for (std::size_t j = 0; j < g->size(1); ++j)
            out[g->index(i, j)] = f(g->coord(0, i), g->coord(1, j));
    return out;
}

void require_same_grid(const ScalarField& a, const ScalarField& b, const char* what) {
    if (!a.grid->same_layout(*b.grid))
        throw std::invalid_argument(std::string(what) + ": fields on mismatched grids");
}

void require_same_grid(const VectorField& a, const ScalarField& b, const char* what) {
    require_same_grid(a.components.front(), b, what);
}

void require_same_grid(const VectorField& a, const VectorField& b, const char* what) {
    require_same_grid(a.components.front(), b.components.front(), what);
}

namespace {
template <typename Op>
ScalarField zip(const ScalarField& a, const ScalarField& b, Op op, const char* what) {
    require_same_grid(a, b, what);
    ScalarField out(a.grid);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(a[i], b[i]);
    return out;
}
} // namespace

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
    return zip(a, b, std::plus<>{}, "operator+");
}
ScalarField operator-(const ScalarField& a, const ScalarField& b) {
    return zip(a, b, std::minus<>{}, "operator-");
}
ScalarField operator*(const ScalarField& a, const ScalarField& b) {
    return zip(a, b, std::multiplies<>{}, "operator*");
}
ScalarField operator/(const ScalarField& a, const ScalarField& b) {
    return zip(a, b, std::divides<>{}, "operator/");
}

ScalarField operator*(double s, const ScalarField& a) {
    ScalarField out(a.grid);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = s * a[i];
    return out;
}

ScalarField operator-(const ScalarField& a) { return -1.0 * a; }

ScalarField operator+(const ScalarField& a, double s) {
    ScalarField out(a.grid);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + s;
    return out;
}

VectorField operator+(const VectorField& a, const VectorField& b) {
    std::vector<ScalarField> comps;
    for (int c = 0; c < a.dim(); ++c) comps.push_back(a[c] + b[c]);
    return VectorField(std::move(comps));
}
VectorField operator-(const VectorField& a, const VectorField& b) {
    std::vector<ScalarField> comps;
    for (int c = 0; c < a.dim(); ++c) comps.push_back(a[c] - b[c]);
    return VectorField(std::move(comps));
}
VectorField operator*(double s, const VectorField& a) {
    std::vector<ScalarField> comps;
    for (int c = 0; c < a.dim(); ++c) comps.push_back(s * a[c]);
    return VectorField(std::move(comps));
}
VectorField operator-(const VectorField& a) { return -1.0 * a; }

VectorField operator*(const ScalarField& s, const VectorField& a) {
    std::vector<ScalarField> comps;
    for (int c = 0; c < a.dim(); ++c) comps.push_back(s * a[c]);
    return VectorField(std::move(comps));
}

ScalarField dot(const VectorField& a, const VectorField& b) {
    require_same_grid(a, b, "dot");
    ScalarField out = a[0] * b[0];
    for (int c = 1; c < a.dim(); ++c) {
        const ScalarField term = a[c] * b[c];
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += term[i];
    }
    return out;
}

double max_abs(const ScalarField& f) {
    double m = 0.0;
    for (double v : f.values) m = std::max(m, std::fabs(v));
    return m;
}

double max_abs(const VectorField& f) {
    double m = 0.0;
    for (const auto& c : f.components) m = std::max(m, max_abs(c));
    return m;
}

double min_value(const ScalarField& f) {
    return *std::min_element(f.values.begin(), f.values.end());
}

bool all_finite(const ScalarField& f) {
    for (double v : f.values)
        if (!std::isfinite(v)) return false;
    return true;
}

double integral(const ScalarField& f) {
    double s = 0.0;
    for (double v : f.values) s += v;
    return s * f.grid->cell_volume();
}

double inner(const ScalarField& a, const ScalarField& b) {
    require_same_grid(a, b, "inner");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s * a.grid->cell_volume();
}

double inner(const VectorField& a, const VectorField& b) {
    double s = 0.0;
    for (int c = 0; c < a.dim(); ++c) s += inner(a[c], b[c]);
    return s;
}

ScalarField shift_cells(const ScalarField& f, long si, long sj) {
    const Grid& g = *f.grid;
    ScalarField out(f.grid);
    const long n0 = static_cast<long>(g.size(0));
    if (g.dim() == 1) {
        for (long i = 0; i < n0; ++i)
            out[static_cast<std::size_t>(((i + si) % n0 + n0) % n0)] = f[i];
    } else {
        const long n1 = static_cast<long>(g.size(1));
        for (long i = 0; i < n0; ++i)
            for (long j = 0; j < n1; ++j) {
                const std::size_t ii = static_cast<std::size_t>(((i + si) % n0 + n0) % n0);
                const std::size_t jj = static_cast<std::size_t>(((j + sj) % n1 + n1) % n1);
                out[g.index(ii, jj)] = f[g.index(i, j)];
            }
    }
    return out;
}

} // namespace epdiff
