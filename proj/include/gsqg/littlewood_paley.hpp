#pragma once

#include <vector>

#include "gsqg/field.hpp"

namespace gsqg {

/// Dyadic Littlewood-Paley partition over a finite range [j_min, j_max].
///
/// The bump profile phi is a concrete Meyer-type construction: with T the
/// normalized integral of h(r) = exp(-1/(1-(2r-3)^2)) over (1, 2),
///     phi(r) = T(2r) on (1/2, 1],   phi(r) = 1 - T(r) on (1, 2),
/// zero elsewhere, so that phi(r) + phi(2r) = 1 on [1/2, 1] and
/// sum_j phi(2^{-j} r) = 1 for every r > 0. The low-pass profile is
/// chi(r) = 1 - sum_{j>=0} phi(2^{-j} r), supported in the unit ball.
class DyadicPartition {
public:
    DyadicPartition(GridPtr grid, int j_min, int j_max);

    int j_min() const noexcept { return j_min_; }
    int j_max() const noexcept { return j_max_; }
    const GridPtr& grid_ptr() const noexcept { return grid_; }

    /// phi_j(xi) = phi(2^{-j} |xi|), chi_j(xi) = chi(2^{-j} |xi|) at radius r = |xi|.
    double phi_j(int j, double r) const;
    double chi_j(int j, double r) const;

    /// Profile values at dimensionless radius.
    static double bump_profile(double r);
    static double low_profile(double r);

private:
    GridPtr grid_;
    int j_min_;
    int j_max_;
};

DyadicPartition build_partition(GridPtr grid, int j_min, int j_max);

/// Delta_j f (mode-wise phi_j weight). j must lie in the partition range.
SpectralField dyadic_block(const SpectralField& f, int j, const DyadicPartition& part);
/// S_j f (mode-wise chi_j weight).
SpectralField low_pass(const SpectralField& f, int j, const DyadicPartition& part);

/// (sum_j (2^{j sigma} ||Delta_j f||_{L2})^2)^{1/2} over the partition range.
/// Throws std::domain_error when more than 1e-10 of the field's energy lies
/// outside the covered annulus (the truncated homogeneous sum would be
/// meaningless there).
double besov_norm(const SpectralField& f, double sigma, const DyadicPartition& part);

struct BernsteinReport {
    double ratio;      // ||Lambda^sigma Delta_j f|| / (2^{sigma j} ||Delta_j f||)
    double inverse;    // reciprocal
    double lower;      // 2^{-|sigma|}
    double upper;      // 2^{+|sigma|}
    bool within;
};

BernsteinReport bernstein_check(const SpectralField& f, int j, double sigma,
                                const DyadicPartition& part);

struct ProductEstimateSample {
    double ratio = 0.0;  // ||fg||_{H^{s+t-1} hom} / (||f||_{H^s hom} ||g||_{H^t hom})
    bool degenerate = false;
    double product_norm = 0.0;
    double f_norm = 0.0;
    double g_norm = 0.0;
};

/// Realized ratio of the Sobolev product estimate (s, t < 1, s + t > 0).
/// The product's mean is removed before the homogeneous norm is taken
/// (homogeneous quantities are defined on zero-mean fields here).
ProductEstimateSample product_estimate_check(const SpectralField& f,
                                             const SpectralField& g, double s, double t);

}  // namespace gsqg
