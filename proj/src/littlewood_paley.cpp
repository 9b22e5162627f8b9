#include "gsqg/littlewood_paley.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "gsqg/multiplier.hpp"
#include "gsqg/operators.hpp"

namespace gsqg {

namespace {

double transition_bump(double t) {
    // exp(-1/(1-(2t-3)^2)) on (1, 2), zero outside
    const double u = 2.0 * t - 3.0;
    const double d = 1.0 - u * u;
    return d > 0.0 ? std::exp(-1.0 / d) : 0.0;
}

// Cumulative table of T(r) = int_1^r h / int_1^2 h with Hermite-cubic
// evaluation between nodes (the derivative h/c is known exactly).
struct TransitionTable {
    static constexpr int cells = 4096;
    std::array<double, cells + 1> value{};
    double norm = 0.0;

    TransitionTable() {
        // 8-point Gauss-Legendre nodes/weights on [-1, 1]
        static const double x[4] = {0.1834346424956498, 0.5255324099163290,
                                    0.7966664774136267, 0.9602898564975363};
        static const double w[4] = {0.3626837833783620, 0.3137066458778873,
                                    0.2223810344533745, 0.1012285362903763};
        const double h = 1.0 / cells;
        value[0] = 0.0;
        for (int i = 0; i < cells; ++i) {
            const double a = 1.0 + i * h;
            const double m = a + 0.5 * h;
            double cell = 0.0;
            for (int q = 0; q < 4; ++q) {
                cell += w[q] * (transition_bump(m + 0.5 * h * x[q]) +
                                transition_bump(m - 0.5 * h * x[q]));
            }
            value[i + 1] = value[i] + cell * 0.5 * h;
        }
        norm = value[cells];
        for (auto& v : value) v /= norm;
    }

    double eval(double r) const {
        if (r <= 1.0) return 0.0;
        if (r >= 2.0) return 1.0;
        const double s = (r - 1.0) * cells;
        int i = static_cast<int>(s);
        if (i >= cells) i = cells - 1;
        const double t = s - i;
        const double h = 1.0 / cells;
        const double r0 = 1.0 + i * h;
        const double y0 = value[i], y1 = value[i + 1];
        const double d0 = transition_bump(r0) / norm * h;
        const double d1 = transition_bump(r0 + h) / norm * h;
        // cubic Hermite basis in t
        const double t2 = t * t, t3 = t2 * t;
        return (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + t) * d0 +
               (-2 * t3 + 3 * t2) * y1 + (t3 - t2) * d1;
    }
};

const TransitionTable& table() {
    static const TransitionTable t;
    return t;
}

}  // namespace

double DyadicPartition::bump_profile(double r) {
    if (r <= 0.5 || r >= 2.0) return 0.0;
    if (r <= 1.0) return table().eval(2.0 * r);
    return 1.0 - table().eval(r);
}

double DyadicPartition::low_profile(double r) {
    if (r <= 0.5) return 1.0;
    if (r >= 1.0) return 0.0;
    return 1.0 - table().eval(2.0 * r);
}

DyadicPartition::DyadicPartition(GridPtr grid, int j_min, int j_max)
    : grid_(std::move(grid)), j_min_(j_min), j_max_(j_max) {
    if (j_min >= j_max)
        throw std::invalid_argument("build_partition requires j_min < j_max");
    if (std::ldexp(1.0, j_max) > grid_->dealias_radius() * (1.0 + 1e-12))
        throw std::invalid_argument(
            "build_partition: 2^j_max exceeds the largest retained wavenumber");
}

double DyadicPartition::phi_j(int j, double r) const {
    return bump_profile(std::ldexp(r, -j));
}

double DyadicPartition::chi_j(int j, double r) const {
    return low_profile(std::ldexp(r, -j));
}

DyadicPartition build_partition(GridPtr grid, int j_min, int j_max) {
    return DyadicPartition(std::move(grid), j_min, j_max);
}

namespace {

void require_in_range(const DyadicPartition& part, int j) {
    if (j < part.j_min() || j > part.j_max())
        throw std::invalid_argument("dyadic index outside the partition range");
}

template <typename Profile>
SpectralField weight_field(const SpectralField& f, Profile&& w) {
    const Grid& g = f.grid();
    SpectralField out(f.grid_ptr());
    const std::size_t n = g.n();
    for (std::size_t ix = 0; ix < n; ++ix) {
        const double kx = g.wavenumber(ix);
        for (std::size_t iy = 0; iy < n; ++iy) {
            const std::size_t i = g.index(ix, iy);
            const double r = std::hypot(kx, g.wavenumber(iy));
            const double a = w(r);
            if (a != 0.0) out[i] = f[i] * a;
        }
    }
    return out;
}

}  // namespace

SpectralField dyadic_block(const SpectralField& f, int j, const DyadicPartition& part) {
    require_in_range(part, j);
    return weight_field(f, [&](double r) { return part.phi_j(j, r); });
}

SpectralField low_pass(const SpectralField& f, int j, const DyadicPartition& part) {
    require_in_range(part, j);
    return weight_field(f, [&](double r) { return part.chi_j(j, r); });
}

double besov_norm(const SpectralField& f, double sigma, const DyadicPartition& part) {
    const Grid& g = f.grid();
    const std::size_t n = g.n();

    // Energy not reproduced by the truncated block sum is an error, not noise.
    double outside = 0.0, total = 0.0;
    for (std::size_t ix = 0; ix < n; ++ix) {
        const double kx = g.wavenumber(ix);
        for (std::size_t iy = 0; iy < n; ++iy) {
            const double r = std::hypot(kx, g.wavenumber(iy));
            const double e = std::norm(f[g.index(ix, iy)]);
            total += e;
            double w = 0.0;
            for (int j = part.j_min(); j <= part.j_max(); ++j) w += part.phi_j(j, r);
            const double gap = 1.0 - w;
            outside += gap * gap * e;
        }
    }
    if (total == 0.0) return 0.0;
    if (std::sqrt(outside / total) > 1e-10)
        throw std::domain_error("besov_norm: field energy outside partition coverage");

    double sum = 0.0;
    for (int j = part.j_min(); j <= part.j_max(); ++j) {
        const double bn = l2_norm(dyadic_block(f, j, part));
        const double wj = std::ldexp(1.0, 0) * std::pow(2.0, j * sigma) * bn;
        sum += wj * wj;
    }
    return std::sqrt(sum);
}

BernsteinReport bernstein_check(const SpectralField& f, int j, double sigma,
                                const DyadicPartition& part) {
    const auto block = dyadic_block(f, j, part);
    const double bn = l2_norm(block);
    if (bn == 0.0) throw std::domain_error("bernstein_check: zero dyadic block");
    const double ln = l2_norm(apply_multiplier(block, MultiplierSymbol::fractional_power(sigma)));
    BernsteinReport rep;
    rep.ratio = ln / (std::pow(2.0, sigma * j) * bn);
    rep.inverse = 1.0 / rep.ratio;
    rep.lower = std::pow(2.0, -std::abs(sigma));
    rep.upper = std::pow(2.0, std::abs(sigma));
    const double slack = 1.0 + 1e-12;
    rep.within = rep.ratio >= rep.lower / slack && rep.ratio <= rep.upper * slack &&
                 rep.inverse >= rep.lower / slack && rep.inverse <= rep.upper * slack;
    return rep;
}

ProductEstimateSample product_estimate_check(const SpectralField& f,
                                             const SpectralField& g, double s, double t) {
    if (!(s < 1.0 && t < 1.0 && s + t > 0.0))
        throw std::invalid_argument("product estimate requires s, t < 1 and s + t > 0");
    ProductEstimateSample out;
    out.f_norm = sobolev_norm(f, s, true);
    out.g_norm = sobolev_norm(g, t, true);
    if (out.f_norm == 0.0 || out.g_norm == 0.0) {
        out.degenerate = true;
        return out;
    }
    auto prod = pointwise_product(f, g);
    prod[prod.grid().index(0, 0)] = {0.0, 0.0};  // homogeneous norms act on zero-mean fields
    out.product_norm = sobolev_norm(prod, s + t - 1.0, true);
    out.ratio = out.product_norm / (out.f_norm * out.g_norm);
    return out;
}

}  // namespace gsqg
