#pragma once

#include "sobmult/grid.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace sobmult {

// Thin wrappers around FFTW. Plans are created with FFTW_ESTIMATE so the
// algorithm choice, and hence the rounding pattern, is reproducible from
// run to run. Plan creation is not thread-safe; norm evaluation is kept
// single-threaded.

/// Unnormalized forward DFT bins of u (row-major in 2D).
std::vector<std::complex<double>> dft_forward(const GridFunction& u);

/// Inverse of dft_forward including the 1/M^dim normalization, so that
/// dft_inverse(dft_forward(u)) reproduces u up to round-off.
GridFunction dft_inverse(int dim, std::size_t m, double period,
                         std::vector<std::complex<double>> spectrum);

/// Signed frequency index of bin i on an M-point axis: i for i < M/2,
/// i - M otherwise (Nyquist maps to -M/2).
inline long long signed_bin(std::size_t i, std::size_t m) {
  return i < m / 2 ? static_cast<long long>(i) : static_cast<long long>(i) - static_cast<long long>(m);
}

/// Physical frequency 2*pi*k/L of the signed bin k.
inline double physical_frequency(long long k, double period) {
  return 2.0 * 3.14159265358979323846 * static_cast<double>(k) / period;
}

/// |xi| of the bin with flat index i (dim 1 or 2, row-major).
double frequency_magnitude(std::size_t i, int dim, std::size_t m, double period);

} // namespace sobmult
