#pragma once

#include <complex>
#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

namespace sobmult {

/**
 * Complex-valued samples on a periodic uniform grid (torus) in dimension
 * 1 or 2 with physical period L, stored row-major. The sample count per
 * axis is a power of two and all samples are finite. Values are immutable
 * after construction and safe to share across threads.
 */
class GridFunction {
public:
  GridFunction(int dim, std::size_t m, double period, std::vector<std::complex<double>> samples);

  static GridFunction zeros(int dim, std::size_t m, double period);

  int dim() const { return dim_; }
  std::size_t m() const { return m_; }
  std::size_t size() const { return samples_.size(); }
  double period() const { return period_; }
  /// Grid spacing L/M.
  double h() const { return period_ / static_cast<double>(m_); }
  /// Quadrature cell volume (L/M)^dim.
  double cell_volume() const;

  std::span<const std::complex<double>> samples() const { return samples_; }
  const std::complex<double>& operator[](std::size_t i) const { return samples_[i]; }

private:
  int dim_;
  std::size_t m_;
  double period_;
  std::vector<std::complex<double>> samples_;
};

/// Pointwise product; both functions must share dim, m, and period.
GridFunction pointwise_product(const GridFunction& u, const GridFunction& v);

/// u scaled by a complex factor.
GridFunction scaled(const GridFunction& u, std::complex<double> factor);

GridFunction pointwise_sum(const GridFunction& u, const GridFunction& v);

// Binary format: magic "SOBG", u32 dim, u32 M, f64 L, then interleaved
// f64 (re, im) samples row-major, little-endian throughout.
void write_sobg(const GridFunction& u, const std::filesystem::path& path);
GridFunction read_sobg(const std::filesystem::path& path);

// CSV rows "index,re,im" (optional header line), dimension 1 only; the
// sample count is taken from the row count.
void write_csv(const GridFunction& u, const std::filesystem::path& path);
GridFunction read_csv(const std::filesystem::path& path, double period);

} // namespace sobmult
