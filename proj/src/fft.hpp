#pragma once

// Internal FFTW plumbing. Plans are cached per grid size and created under a
// mutex with FFTW_ESTIMATE | FFTW_UNALIGNED, so execution is reproducible and
// safe to call concurrently on per-thread buffers.

#include <complex>

#include "gsqg/grid.hpp"

namespace gsqg::detail {

/// Synthesis: values[x] = Re sum_k coef[k] e^{+i xi_k . x}.
void synthesize(const Grid& g, const std::complex<double>* coef, double* values);

/// Analysis with 1/N^2 normalization; output exactly Hermitian-symmetrized.
void analyze(const Grid& g, const double* values, std::complex<double>* coef);

void enforce_hermitian(const Grid& g, std::complex<double>* coef);

}  // namespace gsqg::detail
