#include "gsqg/rng.hpp"

#include <cmath>
#include <numbers>

#include "gsqg/operators.hpp"

namespace gsqg {

std::uint64_t mix64(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : gen_(mix64(mix64(seed) ^ mix64(stream + 0x632be59bd9b4e019ULL))) {}

double Rng::uniform() {
    // 53-bit mantissa in [0, 1)
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
}

namespace {

// Iterates lattice modes of a band in an order that depends only on the band
// and the lattice spacing 2*pi/L, never on N, so a seed realizes the same
// field on every grid that resolves the band.
template <typename Fn>
void for_canonical_modes(const Grid& g, double k_min, double k_max, Fn&& fn) {
    const int kint = static_cast<int>(std::ceil(k_max / g.k0()));
    for (int kx = -kint; kx <= kint; ++kx) {
        for (int ky = -kint; ky <= kint; ++ky) {
            const bool canonical = ky > 0 || (ky == 0 && kx > 0);
            if (!canonical) continue;
            const double r = g.k0() * std::hypot(double(kx), double(ky));
            if (r > k_min && r < k_max) fn(kx, ky, r);
        }
    }
}

void normalize_l2(SpectralField& f) {
    const double nrm = l2_norm(f);
    if (nrm > 0.0) f *= 1.0 / nrm;
}

}  // namespace

SpectralField random_ball_field(GridPtr grid, Rng& rng, double k_max, bool unit_l2) {
    SpectralField f(std::move(grid));
    for_canonical_modes(f.grid(), 0.0, k_max * (1.0 + 1e-12),
                        [&](int kx, int ky, double) {
                            f.set_mode_pair(kx, ky, {rng.gaussian(), rng.gaussian()});
                        });
    if (unit_l2) normalize_l2(f);
    return f;
}

SpectralField random_annulus_field(GridPtr grid, Rng& rng, double k_min, double k_max,
                                   bool unit_l2) {
    SpectralField f(std::move(grid));
    for_canonical_modes(f.grid(), k_min, k_max, [&](int kx, int ky, double) {
        f.set_mode_pair(kx, ky, {rng.gaussian(), rng.gaussian()});
    });
    if (unit_l2) normalize_l2(f);
    return f;
}

SpectralField coherent_annulus_field(GridPtr grid, Rng& rng, double k_min, double k_max,
                                     const std::array<double, 2>& x0, bool unit_l2) {
    SpectralField f(std::move(grid));
    const Grid& g = f.grid();
    for_canonical_modes(g, k_min, k_max, [&](int kx, int ky, double) {
        const double amp = std::abs(rng.gaussian());
        const double phase = -(g.k0() * kx * x0[0] + g.k0() * ky * x0[1]);
        f.set_mode_pair(kx, ky, std::polar(amp, phase));
    });
    if (unit_l2) normalize_l2(f);
    return f;
}

}  // namespace gsqg
