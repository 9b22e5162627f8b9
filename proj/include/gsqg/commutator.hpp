#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gsqg/field.hpp"
#include "gsqg/littlewood_paley.hpp"
#include "gsqg/multiplier.hpp"

namespace gsqg {

enum class DerivKind { Lambda, Partial };

/// [Lambda^{-s} P(D) d_ell, g] f  =  Lambda^{-s} P(D) d_ell (g f) - g (Lambda^{-s} P(D) d_ell f).
/// s in (0,1); throws std::domain_error when the combined spectral support of
/// f and g exceeds the dealias disc (the products would alias).
SpectralField commutator_bracket(const MultiplierSymbol& P, double s, int ell,
                                 const SpectralField& g, const SpectralField& f);

/// L_sigma(f,g,h) = sum over xi of |xi|^sigma (f^ * g^)(xi) conj(h^(xi)) with the
/// L^2 mode weight, i.e. <Lambda^sigma(fg), h>. sigma in (-1,1); h must be
/// band-limited inside a single dyadic annulus A_j = (2^{j-1}, 2^{j+1}).
double trilinear_form(const SpectralField& f, const SpectralField& g,
                      const SpectralField& h, double sigma);

/// [Lambda^{s+rho} P(D) D Delta_j, g] f with D = Lambda or d_ell.
SpectralField localized_commutator(double s, double rho, const MultiplierSymbol& P,
                                   DerivKind d, int ell, int j, const SpectralField& g,
                                   const SpectralField& f, const DyadicPartition& part);

/// int_0^1 |phi + tau * dir|^{-s} dtau for s in (0,1), |dir| = 1. The
/// integrable singularity is removed by splitting at tau* = clamp(-phi.dir, 0, 1)
/// and substituting u = (tau - tau*)^{1-s} on each side; quadrature_n sets the
/// total node budget.
double convexity_integral(const std::array<double, 2>& phi,
                          const std::array<double, 2>& dir, double s,
                          int quadrature_n = 10000);

enum class LemmaId { L2_3, L3_1, L3_3, L3_4 };

std::string lemma_name(LemmaId id);

struct LemmaParams {
    LemmaId id = LemmaId::L3_1;
    double s = 0.5;        // operator smoothing order (L3.1/L3.3/L3.4)
    double sigma = 0.5;    // trilinear weight (L2.3)
    double eps = 0.0;      // epsilon exponent (L2.3/L3.1/L3.3)
    double nu = 0.5;       // L3.4
    double rho = 0.0;      // L3.4
    int k_offset = 2;      // L3.1 block-distance budget |i-j| <= k
    int ell = 1;           // derivative direction
    DerivKind d_kind = DerivKind::Partial;  // L3.4
    MultiplierSymbol P = MultiplierSymbol::identity();
    int j_lo = 0;
    int j_hi = 5;

    void validate() const;  // throws std::invalid_argument with the violated range
};

struct BlockStats {
    int j = 0;
    int count = 0;
    double mean_ratio = 0.0;
    double max_ratio = 0.0;
    double mean_log2_ratio = 0.0;
    double cj = 0.0;  // per-block ratio scale, normalized to unit l2 across blocks
};

struct ConstantReport {
    LemmaParams params;
    int n_trials = 0;
    int skipped = 0;
    std::uint64_t seed = 0;
    std::vector<double> ratios;      // per trial
    std::vector<int> trial_blocks;   // j index per trial
    std::vector<BlockStats> per_block;
    double max_ratio = 0.0;
    double mean_ratio = 0.0;
    double scaling_slope = 0.0;  // least-squares slope of mean log2(ratio) vs j
};

/// Randomized estimate of the realized constant in one commutator lemma.
/// Each trial draws concentrated random fields on the hypothesized dyadic
/// supports (block index swept over [j_lo, j_hi]), takes the extremal test
/// function h for the pairing, and records bracket / RHS-without-constant.
ConstantReport estimate_constant(GridPtr grid, const LemmaParams& params, int n_trials,
                                 std::uint64_t seed);

}  // namespace gsqg
