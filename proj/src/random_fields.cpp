#include "sobmult/random_fields.hpp"

#include "sobmult/errors.hpp"
#include "sobmult/fft.hpp"

#include <cmath>
#include <random>

namespace sobmult {

namespace {

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;

double uniform01(std::mt19937_64& rng) {
  // 53 mantissa bits, open interval (0, 1]: avoids log(0) below.
  return (static_cast<double>(rng() >> 11) + 1.0) * 0x1p-53;
}

std::complex<double> gaussian_pair(std::mt19937_64& rng) {
  const double u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  const double radius = std::sqrt(-2.0 * std::log(u1));
  return {radius * std::cos(kTwoPi * u2), radius * std::sin(kTwoPi * u2)};
}

} // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  // splitmix64 finalizer over a simple combination
  std::uint64_t x = seed;
  for (std::uint64_t v : {a, b, c}) {
    x += 0x9e3779b97f4a7c15ULL + v;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    x = x ^ (x >> 31);
  }
  return x;
}

GridFunction random_band_limited(std::size_t m, double period, long long bandwidth, double decay,
                                 std::uint64_t seed, int dim) {
  if (bandwidth < 0) throw DomainError("bandwidth must be nonnegative");
  if (static_cast<std::size_t>(2 * bandwidth + 2) > m) {
    throw ConfigError("grid with m = " + std::to_string(m) + " cannot hold bandwidth " +
                      std::to_string(bandwidth));
  }
  std::mt19937_64 rng(seed);
  const auto amplitude = [&](double k_mag) { return std::pow(1.0 + k_mag, -decay); };
  const std::size_t count = dim == 1 ? m : m * m;
  std::vector<std::complex<double>> spectrum(count);
  const double scale = static_cast<double>(dim == 1 ? m : m * m);

  if (dim == 1) {
    for (long long k = -bandwidth; k <= bandwidth; ++k) {
      const std::size_t bin = static_cast<std::size_t>((k + static_cast<long long>(m)) % static_cast<long long>(m));
      spectrum[bin] = scale * amplitude(std::abs(static_cast<double>(k))) * gaussian_pair(rng);
    }
  } else {
    for (long long k1 = -bandwidth; k1 <= bandwidth; ++k1) {
      for (long long k2 = -bandwidth; k2 <= bandwidth; ++k2) {
        const double mag = std::hypot(static_cast<double>(k1), static_cast<double>(k2));
        if (mag > static_cast<double>(bandwidth)) continue;
        const std::size_t b1 = static_cast<std::size_t>((k1 + static_cast<long long>(m)) % static_cast<long long>(m));
        const std::size_t b2 = static_cast<std::size_t>((k2 + static_cast<long long>(m)) % static_cast<long long>(m));
        spectrum[b1 * m + b2] = scale * amplitude(mag) * gaussian_pair(rng);
      }
    }
  }
  return dft_inverse(dim, m, period, std::move(spectrum));
}

} // namespace sobmult
