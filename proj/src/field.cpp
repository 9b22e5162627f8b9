#include "gsqg/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fft.hpp"

namespace gsqg {

SpectralField::SpectralField(GridPtr grid) : grid_(std::move(grid)) {
    if (grid_) coef_.assign(grid_->size(), {0.0, 0.0});
}

void SpectralField::set_mode_pair(int kx, int ky, std::complex<double> c) {
    const std::size_t a = grid_->index_of(kx, ky);
    const std::size_t b = grid_->index_of(-kx, -ky);
    if (a == b) {
        coef_[a] = std::complex<double>(c.real(), 0.0);
    } else {
        coef_[a] = c;
        coef_[b] = std::conj(c);
    }
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
    for (std::size_t i = 0; i < coef_.size(); ++i) coef_[i] += o.coef_[i];
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
    for (std::size_t i = 0; i < coef_.size(); ++i) coef_[i] -= o.coef_[i];
    return *this;
}

SpectralField& SpectralField::operator*=(double a) {
    for (auto& c : coef_) c *= a;
    return *this;
}

void SpectralField::axpy(double a, const SpectralField& o) {
    for (std::size_t i = 0; i < coef_.size(); ++i) coef_[i] += a * o.coef_[i];
}

SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
SpectralField operator*(double a, SpectralField f) { return f *= a; }

std::vector<double> to_physical(const SpectralField& f) {
    std::vector<double> out(f.grid().size());
    detail::synthesize(f.grid(), f.data().data(), out.data());
    return out;
}

SpectralField from_physical(GridPtr grid, const std::vector<double>& values) {
    if (values.size() != grid->size())
        throw std::invalid_argument("from_physical: value count does not match grid");
    SpectralField f(std::move(grid));
    detail::analyze(f.grid(), values.data(), f.data().data());
    return f;
}

double hermitian_defect(const SpectralField& f) {
    const Grid& g = f.grid();
    const std::size_t n = g.n();
    double worst = 0.0;
    for (std::size_t ix = 0; ix < n; ++ix) {
        const std::size_t jx = (n - ix) % n;
        for (std::size_t iy = 0; iy < n; ++iy) {
            const std::size_t jy = (n - iy) % n;
            const auto d = f[g.index(ix, iy)] - std::conj(f[g.index(jx, jy)]);
            worst = std::max(worst, std::abs(d));
        }
    }
    return worst;
}

SpectralField cosine_pair_field(GridPtr grid) {
    SpectralField f(std::move(grid));
    f.set_mode_pair(1, 0, {0.5, 0.0});
    f.set_mode_pair(0, 2, {0.5, 0.0});
    return f;
}

SpectralField cosine_mode(GridPtr grid, int kx, int ky, double amplitude) {
    SpectralField f(std::move(grid));
    if (kx == 0 && ky == 0) {
        f.set_mode_pair(0, 0, {amplitude, 0.0});
    } else {
        f.set_mode_pair(kx, ky, {0.5 * amplitude, 0.0});
    }
    return f;
}

}  // namespace gsqg
