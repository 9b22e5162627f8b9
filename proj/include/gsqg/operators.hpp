#pragma once

#include <array>
#include <complex>
#include <functional>

#include "gsqg/field.hpp"
#include "gsqg/multiplier.hpp"

namespace gsqg {

/// coeff(xi) *= m(|xi|); the zero mode uses the symbol's zero-mode value.
/// Throws std::domain_error when the symbol has no zero-mode value and the
/// input carries a nonzero mean.
SpectralField apply_multiplier(const SpectralField& f, const MultiplierSymbol& m);

/// Mode-wise multiplication by an arbitrary function of the integer-free
/// wavenumber components (kx, ky are physical wavenumbers; the Nyquist line
/// is passed with derivative convention for odd symbols by the callers that
/// need it). Used by the commutator lab for composite symbols.
SpectralField apply_mode_function(
    const SpectralField& f,
    const std::function<std::complex<double>(double kx, double ky)>& symbol);

/// d/dx_direction, direction in {1, 2}.
SpectralField derivative(const SpectralField& f, int direction);
/// (-d2 f, d1 f)
std::array<SpectralField, 2> perp_gradient(const SpectralField& f);
SpectralField divergence(const std::array<SpectralField, 2>& v);

/// v = -perp_grad(Lambda^{beta-2} p(Lambda) q); exactly divergence-free.
std::array<SpectralField, 2> velocity_from_scalar(const SpectralField& q, double beta,
                                                  double mu);

/// Physical-space product re-truncated by the dealias disc.
SpectralField pointwise_product(const SpectralField& f, const SpectralField& g);

void dealias_in_place(SpectralField& f);

/// Plancherel Sobolev norm. Homogeneous: (sum_{xi!=0} |xi|^{2 sigma} |f^|^2 L^2)^{1/2};
/// inhomogeneous uses (1+|xi|^2)^sigma over all modes. Homogeneous with
/// sigma < 0 requires an exactly zero mean.
double sobolev_norm(const SpectralField& f, double sigma, bool homogeneous);

double l2_norm(const SpectralField& f);
/// L^2 inner product of two real fields.
double inner_product(const SpectralField& f, const SpectralField& g);
/// H^sigma (or homogeneous) pairing <f, g>.
double sobolev_pairing(const SpectralField& f, const SpectralField& g, double sigma,
                       bool homogeneous);

/// Zero all modes outside the open annulus (k_min, k_max) in |xi| units.
/// k_min < 0 keeps the zero mode (ball projection).
SpectralField band_projection(const SpectralField& f, double k_min, double k_max);

/// Largest |xi| carrying a nonzero coefficient; 0 for the zero field.
double max_active_wavenumber(const SpectralField& f);

double linf_norm(const SpectralField& f);
/// max over grid points of |v|.
double max_speed(const std::array<SpectralField, 2>& v);

/// ||f||_{L^2} via the trapezoidal (uniform-grid) rule in physical space.
double l2_norm_physical(const SpectralField& f);

}  // namespace gsqg
