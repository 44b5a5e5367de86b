#pragma once

#include <cstddef>
#include <memory>
#include <vector>

namespace epdiff {

/// Periodic tensor grid in one or two dimensions.
///
/// Points along axis a sit at x_j = j * spacing(a), j = 0..size(a)-1; the
/// point at length(a) is identified with x = 0. Wavenumbers follow the usual
/// signed DFT layout {0, 1, ..., n/2-1, -n/2, ..., -1} scaled by 2*pi/length.
class Grid {
public:
    Grid(int dim, std::vector<std::size_t> sizes, std::vector<double> lengths);

    int dim() const { return dim_; }
    std::size_t size(int axis) const { return sizes_.at(axis); }
    double length(int axis) const { return lengths_.at(axis); }
    double spacing(int axis) const { return spacings_.at(axis); }
    std::size_t point_count() const { return point_count_; }
    double cell_volume() const { return cell_volume_; }
    double max_spacing() const;
    double min_length() const;

    const std::vector<double>& wavenumbers(int axis) const { return wavenumbers_.at(axis); }

    /// Signed integer mode index for flat position j on an axis (n/2 maps to -n/2).
    long signed_index(int axis, std::size_t j) const;

    double coord(int axis, std::size_t j) const { return spacing(axis) * static_cast<double>(j); }

    /// Shortest periodic distance from coordinate x to 0 along an axis.
    double periodic_distance(int axis, double x) const;

    /// Flat row-major index; for dim()==1 pass j=0.
    std::size_t index(std::size_t i, std::size_t j = 0) const;

    bool same_layout(const Grid& other) const;

private:
    int dim_;
    std::vector<std::size_t> sizes_;
    std::vector<double> lengths_;
    std::vector<double> spacings_;
    std::vector<std::vector<double>> wavenumbers_;
    std::size_t point_count_;
    double cell_volume_;
};

using GridPtr = std::shared_ptr<const Grid>;

/// Builds a validated periodic grid. Sizes must be even and at least 4;
/// lengths must be positive; dim must be 1 or 2.
GridPtr make_grid(int dim, std::vector<std::size_t> sizes, std::vector<double> lengths);

} // namespace epdiff
