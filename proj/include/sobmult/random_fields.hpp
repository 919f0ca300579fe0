#pragma once

#include "sobmult/grid.hpp"

#include <cstdint>

namespace sobmult {

/// Stable seed mixing for independent substreams (sample index, bandwidth,
/// component) derived from one user seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0);

/**
 * Band-limited random grid function: independent complex Gaussian spectral
 * coefficients on |k| <= bandwidth with the power-law amplitude
 * (1 + |k|)^{-decay}, zero elsewhere. Coefficients are drawn in a fixed bin
 * order from an mt19937_64 stream with a hand-rolled Box-Muller transform,
 * so results are reproducible bit for bit for a given (m, bandwidth, decay,
 * seed).
 */
GridFunction random_band_limited(std::size_t m, double period, long long bandwidth, double decay,
                                 std::uint64_t seed, int dim = 1);

} // namespace sobmult
