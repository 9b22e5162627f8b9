#include "gsqg/grid.hpp"

#include <stdexcept>

namespace gsqg {

namespace {
bool is_pow2(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }
}

Grid::Grid(std::size_t n_points, double side_length, double dealias_cutoff)
    : n_(n_points), length_(side_length), cutoff_(dealias_cutoff) {
    if (!is_pow2(n_points) || n_points < 8)
        throw std::invalid_argument("n_points must be a power of two >= 8");
    if (!(side_length > 0.0))
        throw std::invalid_argument("side_length must be positive");
    if (!(dealias_cutoff > 0.0) || dealias_cutoff > 1.0)
        throw std::invalid_argument("dealias_cutoff must lie in (0, 1]");
    k0_ = 2.0 * std::numbers::pi / length_;
    const double r = cutoff_ * static_cast<double>(n_ / 2);
    retained_r2_ = r * r * (1.0 + 1e-12);
}

GridPtr make_grid(std::size_t n_points, double side_length, double dealias_cutoff) {
    return std::make_shared<const Grid>(n_points, side_length, dealias_cutoff);
}

}  // namespace gsqg
