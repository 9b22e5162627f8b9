#include "gsqg/operators.hpp"

#include <cmath>
#include <stdexcept>

#include "fft.hpp"

namespace gsqg {

namespace {

void require_same_grid(const SpectralField& f, const SpectralField& g) {
    if (f.grid() != g.grid()) throw std::invalid_argument("fields live on different grids");
}

bool zero_mean(const SpectralField& f) {
    const auto c = f[f.grid().index(0, 0)];
    return c.real() == 0.0 && c.imag() == 0.0;
}

}  // namespace

SpectralField apply_multiplier(const SpectralField& f, const MultiplierSymbol& m) {
    const Grid& g = f.grid();
    SpectralField out(f.grid_ptr());
    const std::size_t n = g.n();
    for (std::size_t ix = 0; ix < n; ++ix) {
        const double kx = g.wavenumber(ix);
        for (std::size_t iy = 0; iy < n; ++iy) {
            const double ky = g.wavenumber(iy);
            const std::size_t i = g.index(ix, iy);
            if (ix == 0 && iy == 0) {
                if (m.zero_mode_value()) {
                    out[i] = f[i] * (*m.zero_mode_value());
                } else if (f[i] != std::complex<double>(0.0, 0.0)) {
                    throw std::domain_error(
                        "apply_multiplier: symbol '" + m.name() +
                        "' is undefined at xi = 0 but the field has a nonzero mean");
                }
                continue;
            }
            const double w = m(std::hypot(kx, ky));
            if (!std::isfinite(w))
                throw std::domain_error("apply_multiplier: symbol '" + m.name() +
                                        "' is not finite on a retained mode");
            out[i] = f[i] * w;
        }
    }
    return out;
}

SpectralField apply_mode_function(
    const SpectralField& f,
    const std::function<std::complex<double>(double, double)>& symbol) {
    const Grid& g = f.grid();
    SpectralField out(f.grid_ptr());
    const std::size_t n = g.n();
    for (std::size_t ix = 0; ix < n; ++ix) {
        const double kx = g.wavenumber(ix);
        for (std::size_t iy = 0; iy < n; ++iy) {
            const std::size_t i = g.index(ix, iy);
            out[i] = f[i] * symbol(kx, g.wavenumber(iy));
        }
    }
    detail::enforce_hermitian(g, out.data().data());
    return out;
}

SpectralField derivative(const SpectralField& f, int direction) {
    if (direction != 1 && direction != 2)
        throw std::invalid_argument("derivative direction must be 1 or 2");
    const Grid& g = f.grid();
    SpectralField out(f.grid_ptr());
    const std::size_t n = g.n();
    for (std::size_t ix = 0; ix < n; ++ix) {
        const double kx = g.deriv_wavenumber(ix);
        for (std::size_t iy = 0; iy < n; ++iy) {
            const double k = direction == 1 ? kx : g.deriv_wavenumber(iy);
            const std::size_t i = g.index(ix, iy);
            out[i] = f[i] * std::complex<double>(0.0, k);
        }
    }
    return out;
}

std::array<SpectralField, 2> perp_gradient(const SpectralField& f) {
    auto d2 = derivative(f, 2);
    d2 *= -1.0;
    return {std::move(d2), derivative(f, 1)};
}

SpectralField divergence(const std::array<SpectralField, 2>& v) {
    require_same_grid(v[0], v[1]);
    auto out = derivative(v[0], 1);
    out += derivative(v[1], 2);
    return out;
}

std::array<SpectralField, 2> velocity_from_scalar(const SpectralField& q, double beta,
                                                  double mu) {
    const auto aq = apply_multiplier(q, MultiplierSymbol::constitutive(beta, mu));
    // v = -perp_grad(A q) = (d2 A q, -d1 A q)
    auto v1 = derivative(aq, 2);
    auto v2 = derivative(aq, 1);
    v2 *= -1.0;
    return {std::move(v1), std::move(v2)};
}

SpectralField pointwise_product(const SpectralField& f, const SpectralField& g) {
    require_same_grid(f, g);
    auto fp = to_physical(f);
    const auto gp = to_physical(g);
    for (std::size_t i = 0; i < fp.size(); ++i) fp[i] *= gp[i];
    auto out = from_physical(f.grid_ptr(), fp);
    dealias_in_place(out);
    return out;
}

void dealias_in_place(SpectralField& f) {
    const Grid& g = f.grid();
    const std::size_t n = g.n();
    for (std::size_t ix = 0; ix < n; ++ix)
        for (std::size_t iy = 0; iy < n; ++iy)
            if (!g.retained(ix, iy)) f[g.index(ix, iy)] = {0.0, 0.0};
}

double sobolev_norm(const SpectralField& f, double sigma, bool homogeneous) {
    const Grid& g = f.grid();
    if (homogeneous && sigma < 0.0 && !zero_mean(f))
        throw std::domain_error(
            "homogeneous norm of negative order requires a zero-mean field");
    const std::size_t n = g.n();
    double sum = 0.0;
    for (std::size_t ix = 0; ix < n; ++ix) {
        const double kx = g.wavenumber(ix);
        for (std::size_t iy = 0; iy < n; ++iy) {
            const double ky = g.wavenumber(iy);
            const double r2 = kx * kx + ky * ky;
            const std::size_t i = g.index(ix, iy);
            if (homogeneous) {
                if (r2 == 0.0) continue;
                sum += std::pow(r2, sigma) * std::norm(f[i]);
            } else {
                sum += std::pow(1.0 + r2, sigma) * std::norm(f[i]);
            }
        }
    }
    return std::sqrt(g.length() * g.length() * sum);
}

double l2_norm(const SpectralField& f) {
    double sum = 0.0;
    for (const auto& c : f.data()) sum += std::norm(c);
    return std::sqrt(f.grid().length() * f.grid().length() * sum);
}

double inner_product(const SpectralField& f, const SpectralField& g) {
    require_same_grid(f, g);
    double sum = 0.0;
    const auto& a = f.data();
    const auto& b = g.data();
    for (std::size_t i = 0; i < a.size(); ++i)
        sum += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    return f.grid().length() * f.grid().length() * sum;
}

double sobolev_pairing(const SpectralField& f, const SpectralField& g, double sigma,
                       bool homogeneous) {
    require_same_grid(f, g);
    const Grid& gr = f.grid();
    const std::size_t n = gr.n();
    double sum = 0.0;
    for (std::size_t ix = 0; ix < n; ++ix) {
        const double kx = gr.wavenumber(ix);
        for (std::size_t iy = 0; iy < n; ++iy) {
            const double ky = gr.wavenumber(iy);
            const double r2 = kx * kx + ky * ky;
            double w;
            if (homogeneous) {
                if (r2 == 0.0) continue;
                w = std::pow(r2, sigma);
            } else {
                w = std::pow(1.0 + r2, sigma);
            }
            const std::size_t i = gr.index(ix, iy);
            sum += w * (f[i].real() * g[i].real() + f[i].imag() * g[i].imag());
        }
    }
    return gr.length() * gr.length() * sum;
}

SpectralField band_projection(const SpectralField& f, double k_min, double k_max) {
    const Grid& g = f.grid();
    SpectralField out(f.grid_ptr());
    const std::size_t n = g.n();
    for (std::size_t ix = 0; ix < n; ++ix) {
        const double kx = g.wavenumber(ix);
        for (std::size_t iy = 0; iy < n; ++iy) {
            const double r = std::hypot(kx, g.wavenumber(iy));
            const std::size_t i = g.index(ix, iy);
            if (r > k_min && r < k_max) out[i] = f[i];
        }
    }
    return out;
}

double max_active_wavenumber(const SpectralField& f) {
    const Grid& g = f.grid();
    const std::size_t n = g.n();
    double kmax = 0.0;
    for (std::size_t ix = 0; ix < n; ++ix) {
        const double kx = g.wavenumber(ix);
        for (std::size_t iy = 0; iy < n; ++iy) {
            if (f[g.index(ix, iy)] != std::complex<double>(0.0, 0.0))
                kmax = std::max(kmax, std::hypot(kx, g.wavenumber(iy)));
        }
    }
    return kmax;
}

double linf_norm(const SpectralField& f) {
    const auto p = to_physical(f);
    double m = 0.0;
    for (double v : p) m = std::max(m, std::abs(v));
    return m;
}

double max_speed(const std::array<SpectralField, 2>& v) {
    const auto p1 = to_physical(v[0]);
    const auto p2 = to_physical(v[1]);
    double m = 0.0;
    for (std::size_t i = 0; i < p1.size(); ++i)
        m = std::max(m, std::hypot(p1[i], p2[i]));
    return m;
}

double l2_norm_physical(const SpectralField& f) {
    const auto p = to_physical(f);
    double sum = 0.0;
    for (double v : p) sum += v * v;
    const double w = f.grid().dx() * f.grid().dx();
    return std::sqrt(w * sum);
}

}  // namespace gsqg
