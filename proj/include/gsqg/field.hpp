#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "gsqg/grid.hpp"

namespace gsqg {

/// Real scalar field on the torus stored as complex Fourier coefficients in
/// FFT layout. Real-valuedness is the Hermitian symmetry invariant
/// coeff(-xi) = conj(coeff(xi)); every constructor and transform in this
/// library maintains it.
class SpectralField {
public:
    explicit SpectralField(GridPtr grid);

    const Grid& grid() const noexcept { return *grid_; }
    const GridPtr& grid_ptr() const noexcept { return grid_; }

    std::complex<double>& operator[](std::size_t i) noexcept { return coef_[i]; }
    const std::complex<double>& operator[](std::size_t i) const noexcept { return coef_[i]; }
    std::vector<std::complex<double>>& data() noexcept { return coef_; }
    const std::vector<std::complex<double>>& data() const noexcept { return coef_; }

    /// Coefficient of the integer-frequency mode (kx, ky).
    std::complex<double> mode(int kx, int ky) const {
        return coef_[grid_->index_of(kx, ky)];
    }
    /// Set the (kx, ky) coefficient and its Hermitian partner.
    void set_mode_pair(int kx, int ky, std::complex<double> c);

    SpectralField& operator+=(const SpectralField& o);
    SpectralField& operator-=(const SpectralField& o);
    SpectralField& operator*=(double a);
    /// this += a * o
    void axpy(double a, const SpectralField& o);

    std::optional<double> time_tag;

private:
    GridPtr grid_;
    std::vector<std::complex<double>> coef_;
};

SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(double a, SpectralField f);

/// Synthesis at the grid points (row-major, x-major layout).
std::vector<double> to_physical(const SpectralField& f);
/// Analysis of point values; output is exactly Hermitian-symmetrized.
SpectralField from_physical(GridPtr grid, const std::vector<double>& values);

/// max |coeff(-xi) - conj(coeff(xi))| over all modes.
double hermitian_defect(const SpectralField& f);

/// Standard smooth initial datum cos(x1) + cos(2 x2) scaled to the torus.
SpectralField cosine_pair_field(GridPtr grid);
/// Single-mode field amplitude * cos(kx*x1 + ky*x2).
SpectralField cosine_mode(GridPtr grid, int kx, int ky, double amplitude = 1.0);

}  // namespace gsqg
