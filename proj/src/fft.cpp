#include "sobmult/fft.hpp"

#include "sobmult/errors.hpp"

#include <fftw3.h>

#include <cmath>

namespace sobmult {

namespace {

void run_plan(int dim, std::size_t m, std::vector<std::complex<double>>& data, int sign) {
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan = dim == 1
                       ? fftw_plan_dft_1d(static_cast<int>(m), buf, buf, sign, FFTW_ESTIMATE)
                       : fftw_plan_dft_2d(static_cast<int>(m), static_cast<int>(m), buf, buf, sign,
                                          FFTW_ESTIMATE);
  if (plan == nullptr) throw Error("FFTW plan creation failed");
  fftw_execute(plan);
  fftw_destroy_plan(plan);
}

} // namespace

std::vector<std::complex<double>> dft_forward(const GridFunction& u) {
  std::vector<std::complex<double>> bins(u.samples().begin(), u.samples().end());
  run_plan(u.dim(), u.m(), bins, FFTW_FORWARD);
  return bins;
}

GridFunction dft_inverse(int dim, std::size_t m, double period,
                         std::vector<std::complex<double>> spectrum) {
  run_plan(dim, m, spectrum, FFTW_BACKWARD);
  const double scale = dim == 1 ? 1.0 / static_cast<double>(m) : 1.0 / static_cast<double>(m * m);
  for (auto& z : spectrum) z *= scale;
  return GridFunction(dim, m, period, std::move(spectrum));
}

double frequency_magnitude(std::size_t i, int dim, std::size_t m, double period) {
  if (dim == 1) {
    return std::abs(physical_frequency(signed_bin(i, m), period));
  }
  const double x1 = physical_frequency(signed_bin(i / m, m), period);
  const double x2 = physical_frequency(signed_bin(i % m, m), period);
  return std::hypot(x1, x2);
}

} // namespace sobmult
