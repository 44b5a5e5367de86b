#include "epdiff/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace epdiff {

Grid::Grid(int dim, std::vector<std::size_t> sizes, std::vector<double> lengths)
    : dim_(dim), sizes_(std::move(sizes)), lengths_(std::move(lengths)) {
    if (dim_ != 1 && dim_ != 2)
        throw std::invalid_argument("Grid: dim must be 1 or 2, got " + std::to_string(dim_));
    if (sizes_.size() != static_cast<std::size_t>(dim_) ||
        lengths_.size() != static_cast<std::size_t>(dim_))
        throw std::invalid_argument("Grid: sizes/lengths must have one entry per axis");

    point_count_ = 1;
    cell_volume_ = 1.0;
    for (int a = 0; a < dim_; ++a) {
        const std::size_t n = sizes_[a];
        const double len = lengths_[a];
        if (n < 4 || n % 2 != 0)
            throw std::invalid_argument("Grid: axis " + std::to_string(a) +
                                        " size must be even and >= 4, got " + std::to_string(n));
        if (!(len > 0.0))
            throw std::invalid_argument("Grid: axis " + std::to_string(a) +
                                        " length must be positive");
        spacings_.push_back(len / static_cast<double>(n));
        point_count_ *= n;
        cell_volume_ *= spacings_.back();

        std::vector<double> k(n);
        const double scale = 2.0 * std::numbers::pi / len;
        for (std::size_t j = 0; j < n; ++j) {
            const long s = (j < n / 2) ? static_cast<long>(j)
                                       : static_cast<long>(j) - static_cast<long>(n);
            k[j] = scale * static_cast<double>(s);
        }
        wavenumbers_.push_back(std::move(k));
    }
}

double Grid::max_spacing() const {
    return *std::max_element(spacings_.begin(), spacings_.end());
}

double Grid::min_length() const {
    return *std::min_element(lengths_.begin(), lengths_.end());
}

long Grid::signed_index(int axis, std::size_t j) const {
    const std::size_t n = size(axis);
    return (j < n / 2) ? static_cast<long>(j) : static_cast<long>(j) - static_cast<long>(n);
}

double Grid::periodic_distance(int axis, double x) const {
    const double len = length(axis);
    double d = std::fmod(std::fabs(x), len);
    return std::min(d, len - d);
}

std::size_t Grid::index(std::size_t i, std::size_t j) const {
    return dim_ == 1 ? i : i * sizes_[1] + j;
}

bool Grid::same_layout(const Grid& other) const {
    return dim_ == other.dim_ && sizes_ == other.sizes_ && lengths_ == other.lengths_;
}

GridPtr make_grid(int dim, std::vector<std::size_t> sizes, std::vector<double> lengths) {
    return std::make_shared<const Grid>(dim, std::move(sizes), std::move(lengths));
}

} // namespace epdiff
