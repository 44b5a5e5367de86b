#pragma once

#include <functional>
#include <vector>

#include "epdiff/grid.hpp"

namespace epdiff {

/// Real samples on a Grid, row-major over grid points.
struct ScalarField {
    GridPtr grid;
    std::vector<double> values;

    ScalarField() = default;
    explicit ScalarField(GridPtr g);
    ScalarField(GridPtr g, std::vector<double> v);

    double& operator[](std::size_t i) { return values[i]; }
    double operator[](std::size_t i) const { return values[i]; }
    std::size_t size() const { return values.size(); }
};

/// dim scalar components sharing one grid: (u) in 1-D, (u, v) in 2-D.
struct VectorField {
    std::vector<ScalarField> components;

    VectorField() = default;
    explicit VectorField(std::vector<ScalarField> comps);

    const GridPtr& grid() const { return components.front().grid; }
    int dim() const { return static_cast<int>(components.size()); }
    ScalarField& operator[](int c) { return components[c]; }
    const ScalarField& operator[](int c) const { return components[c]; }
};

ScalarField zeros(const GridPtr& g);
ScalarField constant_field(const GridPtr& g, double value);
VectorField zeros_vector(const GridPtr& g);

/// Samples f(x) in 1-D or f(x, y) in 2-D at the grid points.
ScalarField sample(const GridPtr& g, const std::function<double(double)>& f);
ScalarField sample(const GridPtr& g, const std::function<double(double, double)>& f);

void require_same_grid(const ScalarField& a, const ScalarField& b, const char* what);
void require_same_grid(const VectorField& a, const ScalarField& b, const char* what);
void require_same_grid(const VectorField& a, const VectorField& b, const char* what);

ScalarField operator+(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a, const ScalarField& b);
ScalarField operator*(const ScalarField& a, const ScalarField& b); // pointwise
ScalarField operator/(const ScalarField& a, const ScalarField& b); // pointwise
ScalarField operator*(double s, const ScalarField& a);
ScalarField operator-(const ScalarField& a);
ScalarField operator+(const ScalarField& a, double s);

VectorField operator+(const VectorField& a, const VectorField& b);
VectorField operator-(const VectorField& a, const VectorField& b);
VectorField operator*(double s, const VectorField& a);
VectorField operator-(const VectorField& a);
VectorField operator*(const ScalarField& s, const VectorField& a); // pointwise scale

ScalarField dot(const VectorField& a, const VectorField& b);

double max_abs(const ScalarField& f);
double max_abs(const VectorField& f);
double min_value(const ScalarField& f);
bool all_finite(const ScalarField& f);

/// Grid quadrature: sum of values times cell volume.
double integral(const ScalarField& f);
/// Grid inner product <a, b> = sum a_i b_i * cell volume.
double inner(const ScalarField& a, const ScalarField& b);
double inner(const VectorField& a, const VectorField& b);

/// Cyclic shift of samples by the given number of cells per axis.
ScalarField shift_cells(const ScalarField& f, long si, long sj = 0);

} // namespace epdiff
