#pragma once

#include <cmath>
#include <cstddef>
#include <memory>
#include <numbers>

namespace gsqg {

/// Uniform N x N lattice on the periodic square [0, L)^2 together with the
/// retained-mode (dealias) disc. Spectral data is stored in FFT layout:
/// storage index i along an axis carries integer frequency i for i < N/2
/// and i - N otherwise (the Nyquist line i = N/2 carries -N/2).
class Grid {
public:
    Grid(std::size_t n_points, double side_length, double dealias_cutoff = 2.0 / 3.0);

    std::size_t n() const noexcept { return n_; }
    std::size_t size() const noexcept { return n_ * n_; }
    double length() const noexcept { return length_; }
    double dealias_cutoff() const noexcept { return cutoff_; }
    double dx() const noexcept { return length_ / static_cast<double>(n_); }

    /// Integer frequency along one axis for storage index i.
    int freq(std::size_t i) const noexcept {
        return i < n_ / 2 ? static_cast<int>(i) : static_cast<int>(i) - static_cast<int>(n_);
    }

    /// Physical wavenumber 2*pi*k/L along one axis.
    double wavenumber(std::size_t i) const noexcept { return k0_ * freq(i); }

    /// Wavenumber used by odd (derivative) symbols. The Nyquist line carries
    /// no usable sign information for a real field, so it is mapped to zero.
    double deriv_wavenumber(std::size_t i) const noexcept {
        return i == n_ / 2 ? 0.0 : k0_ * freq(i);
    }

    /// Storage index of integer frequency pair (kx, ky).
    std::size_t index_of(int kx, int ky) const noexcept {
        const int n = static_cast<int>(n_);
        return index((kx % n + n) % n, (ky % n + n) % n);
    }
    std::size_t index(std::size_t ix, std::size_t iy) const noexcept { return ix * n_ + iy; }

    /// Smallest nonzero |xi| step, 2*pi/L.
    double k0() const noexcept { return k0_; }
    /// Nyquist wavenumber pi*N/L.
    double nyquist() const noexcept { return k0_ * static_cast<double>(n_ / 2); }
    /// Radius of the retained isotropic disc, cutoff * Nyquist.
    double dealias_radius() const noexcept { return cutoff_ * nyquist(); }

    /// True when the mode at storage indices (ix, iy) is inside the dealias disc.
    bool retained(std::size_t ix, std::size_t iy) const noexcept {
        const double kx = static_cast<double>(freq(ix));
        const double ky = static_cast<double>(freq(iy));
        return kx * kx + ky * ky <= retained_r2_;
    }

    bool operator==(const Grid& o) const noexcept {
        return n_ == o.n_ && length_ == o.length_ && cutoff_ == o.cutoff_;
    }
    bool operator!=(const Grid& o) const noexcept { return !(*this == o); }

private:
    std::size_t n_;
    double length_;
    double cutoff_;
    double k0_;
    double retained_r2_;  // integer-frequency radius^2 with round-off slack
};

using GridPtr = std::shared_ptr<const Grid>;

GridPtr make_grid(std::size_t n_points, double side_length,
                  double dealias_cutoff = 2.0 / 3.0);

}  // namespace gsqg
