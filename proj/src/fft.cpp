#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <vector>

namespace gsqg::detail {

namespace {

struct PlanPair {
    fftw_plan forward = nullptr;   // physical -> spectral (FFTW_FORWARD)
    fftw_plan backward = nullptr;  // spectral -> physical (FFTW_BACKWARD)
};

PlanPair& plans_for(std::size_t n) {
    static std::mutex mtx;
    static std::map<std::size_t, PlanPair> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    const int ni = static_cast<int>(n);
    fftw_complex* a = fftw_alloc_complex(n * n);
    fftw_complex* b = fftw_alloc_complex(n * n);
    PlanPair p;
    // FFTW_UNALIGNED lets the plans run on arbitrary caller buffers.
    p.forward = fftw_plan_dft_2d(ni, ni, a, b, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    p.backward = fftw_plan_dft_2d(ni, ni, a, b, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(a);
    fftw_free(b);
    return cache.emplace(n, p).first->second;
}

std::vector<std::complex<double>>& scratch(std::size_t size, int which) {
    thread_local std::vector<std::complex<double>> bufs[2];
    auto& b = bufs[which];
    if (b.size() < size) b.resize(size);
    return b;
}

fftw_complex* as_fftw(std::complex<double>* p) { return reinterpret_cast<fftw_complex*>(p); }

}  // namespace

void enforce_hermitian(const Grid& g, std::complex<double>* coef) {
    const std::size_t n = g.n();
    for (std::size_t ix = 0; ix < n; ++ix) {
        const std::size_t jx = (n - ix) % n;
        for (std::size_t iy = 0; iy < n; ++iy) {
            const std::size_t jy = (n - iy) % n;
            const std::size_t a = g.index(ix, iy);
            const std::size_t b = g.index(jx, jy);
            if (a > b) continue;
            if (a == b) {
                coef[a] = std::complex<double>(coef[a].real(), 0.0);
            } else {
                const std::complex<double> avg =
                    0.5 * (coef[a] + std::conj(coef[b]));
                coef[a] = avg;
                coef[b] = std::conj(avg);
            }
        }
    }
}

void synthesize(const Grid& g, const std::complex<double>* coef, double* values) {
    const std::size_t sz = g.size();
    auto& in = scratch(sz, 0);
    auto& out = scratch(sz, 1);
    std::copy(coef, coef + sz, in.begin());
    fftw_execute_dft(plans_for(g.n()).backward, as_fftw(in.data()), as_fftw(out.data()));
    for (std::size_t i = 0; i < sz; ++i) values[i] = out[i].real();
}

void analyze(const Grid& g, const double* values, std::complex<double>* coef) {
    const std::size_t sz = g.size();
    auto& in = scratch(sz, 0);
    auto& out = scratch(sz, 1);
    for (std::size_t i = 0; i < sz; ++i) in[i] = values[i];
    fftw_execute_dft(plans_for(g.n()).forward, as_fftw(in.data()), as_fftw(out.data()));
    const double scale = 1.0 / static_cast<double>(sz);
    for (std::size_t i = 0; i < sz; ++i) coef[i] = out[i] * scale;
    enforce_hermitian(g, coef);
}

}  // namespace gsqg::detail
