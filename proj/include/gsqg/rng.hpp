#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "gsqg/field.hpp"

namespace gsqg {

std::uint64_t mix64(std::uint64_t x);

/// Deterministic random stream. Trial streams are derived as
/// Rng(seed, trial_index) so that trials are order-independent.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    double uniform();   // [0, 1)
    double gaussian();  // N(0, 1), Box-Muller

private:
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Zero-mean Gaussian field with independent coefficients on all lattice
/// modes with 0 < |xi| <= k_max. The draw order depends only on k_max and
/// the lattice spacing, so the same seed realizes the same field on any
/// grid that resolves the band.
SpectralField random_ball_field(GridPtr grid, Rng& rng, double k_max,
                                bool unit_l2 = true);

/// Gaussian field supported on the open annulus (k_min, k_max).
SpectralField random_annulus_field(GridPtr grid, Rng& rng, double k_min, double k_max,
                                   bool unit_l2 = true);

/// Concentrated random atom: nonnegative random amplitudes on the annulus
/// modes, all carrying the common translation phase e^{-i xi . x0}. The
/// result is a real bump centered at x0, the coherent profile the sharp
/// product/commutator interactions require.
SpectralField coherent_annulus_field(GridPtr grid, Rng& rng, double k_min, double k_max,
                                     const std::array<double, 2>& x0, bool unit_l2 = true);

}  // namespace gsqg
