#include "sobmult/norms.hpp"

#include "sobmult/errors.hpp"
#include "sobmult/fft.hpp"

#include <cmath>
#include <complex>
#include <vector>

namespace sobmult {

namespace {

double pow_abs(double magnitude, double exponent) {
  if (exponent == 2.0) return magnitude * magnitude;
  if (exponent == 1.0) return magnitude;
  return std::pow(magnitude, exponent);
}

} // namespace

double lp_norm_grid(const GridFunction& u, const Rational& p) {
  if (p < Rational(1)) throw DomainError("L^p norm requires p >= 1, got p = " + p.str());
  const double pd = p.to_double();
  double sum = 0.0;
  for (const auto& z : u.samples()) sum += pow_abs(std::abs(z), pd);
  return std::pow(sum * u.cell_volume(), 1.0 / pd);
}

double bessel_norm(const GridFunction& u, const Rational& s, const Rational& p) {
  if (p <= Rational(1)) throw DomainError("Bessel norm requires 1 < p, got p = " + p.str());
  const double half_s = s.to_double() / 2.0;
  auto bins = dft_forward(u);
  for (std::size_t i = 0; i < bins.size(); ++i) {
    const double mag = frequency_magnitude(i, u.dim(), u.m(), u.period());
    bins[i] *= std::pow(1.0 + mag * mag, half_s);
  }
  return lp_norm_grid(dft_inverse(u.dim(), u.m(), u.period(), std::move(bins)), p);
}

double slobodeckij_seminorm(const GridFunction& u, const Rational& theta, const Rational& p) {
  if (u.dim() != 1) throw UsageError("Gagliardo seminorm supports dimension 1 only");
  if (theta <= Rational(0) || theta >= Rational(1)) {
    throw DomainError("Gagliardo seminorm requires 0 < theta < 1, got theta = " + theta.str());
  }
  if (p < Rational(1)) throw DomainError("Gagliardo seminorm requires p >= 1, got p = " + p.str());

  const std::size_t m = u.m();
  const double h = u.h();
  const double pd = p.to_double();
  const double kernel_exp = 1.0 + theta.to_double() * pd; // n + theta p with n = 1
  const auto samples = u.samples();

  constexpr std::size_t kTile = 1024;
  double total = 0.0;
  for (std::size_t offset = 1; offset < m; ++offset) {
    const std::size_t wrapped = std::min(offset, m - offset);
    const double dist = static_cast<double>(wrapped) * h;
    const double weight = h * h / std::pow(dist, kernel_exp);
    double offset_sum = 0.0;
    for (std::size_t tile = 0; tile < m; tile += kTile) {
      const std::size_t end = std::min(tile + kTile, m);
      double tile_sum = 0.0;
      for (std::size_t i = tile; i < end; ++i) {
        const std::size_t j = i + offset < m ? i + offset : i + offset - m;
        tile_sum += pow_abs(std::abs(samples[i] - samples[j]), pd);
      }
      offset_sum += tile_sum;
    }
    total += weight * offset_sum;
  }
  return std::pow(total, 1.0 / pd);
}

GridFunction spectral_derivative(const GridFunction& u, int order_x, int order_y) {
  if (order_x < 0 || order_y < 0) throw DomainError("derivative order must be nonnegative");
  if (u.dim() == 1 && order_y != 0) throw DomainError("second axis order needs a 2D grid");
  if (order_x == 0 && order_y == 0) return u;
  auto bins = dft_forward(u);
  const std::size_t m = u.m();
  for (std::size_t i = 0; i < bins.size(); ++i) {
    const long long k1 = u.dim() == 1 ? signed_bin(i, m) : signed_bin(i / m, m);
    const long long k2 = u.dim() == 1 ? 0 : signed_bin(i % m, m);
    std::complex<double> factor{1.0, 0.0};
    const std::complex<double> ix1{0.0, physical_frequency(k1, u.period())};
    const std::complex<double> ix2{0.0, physical_frequency(k2, u.period())};
    for (int a = 0; a < order_x; ++a) factor *= ix1;
    for (int a = 0; a < order_y; ++a) factor *= ix2;
    bins[i] *= factor;
  }
  return dft_inverse(u.dim(), u.m(), u.period(), std::move(bins));
}

double sobolev_norm(const GridFunction& u, const Rational& s, const Rational& p) {
  if (s < Rational(0)) throw DomainError("classical Sobolev norm requires s >= 0, got s = " + s.str());
  const Rational theta = s.frac();
  if (!theta.is_zero() && u.dim() != 1) {
    throw UsageError("fractional Sobolev norm supports dimension 1 only");
  }
  const long long k = s.floor().num().convert_to<long long>();

  double total = 0.0;
  if (u.dim() == 1) {
    for (long long order = 0; order <= k; ++order) {
      total += lp_norm_grid(spectral_derivative(u, static_cast<int>(order)), p);
    }
    if (!theta.is_zero()) {
      total += slobodeckij_seminorm(spectral_derivative(u, static_cast<int>(k)), theta, p);
    }
  } else {
    for (long long total_order = 0; total_order <= k; ++total_order) {
      for (long long ox = 0; ox <= total_order; ++ox) {
        const long long oy = total_order - ox;
        total += lp_norm_grid(spectral_derivative(u, static_cast<int>(ox), static_cast<int>(oy)), p);
      }
    }
  }
  return total;
}

namespace {

// Spectral grid ceiling used to bound the block range.
double max_frequency(const GridFunction& u) {
  const double axis = physical_frequency(static_cast<long long>(u.m() / 2), u.period());
  return u.dim() == 1 ? axis : axis * std::sqrt(2.0);
}

std::vector<GridFunction> all_blocks(const GridFunction& u, const LPFilterBank& bank, int blocks) {
  auto bins = dft_forward(u);
  std::vector<GridFunction> out;
  out.reserve(blocks + 1);
  for (int j = 0; j <= blocks; ++j) {
    auto masked = bins;
    for (std::size_t i = 0; i < masked.size(); ++i) {
      masked[i] *= bank.block_weight(j, frequency_magnitude(i, u.dim(), u.m(), u.period()));
    }
    out.push_back(dft_inverse(u.dim(), u.m(), u.period(), std::move(masked)));
  }
  return out;
}

} // namespace

double besov_norm(const GridFunction& u, const Rational& s, const Rational& p, const Rational& q,
                  const LPFilterBank& bank) {
  if (p < Rational(1) || q < Rational(1)) {
    throw DomainError("Besov norm requires 1 <= p, q");
  }
  const int blocks = bank.blocks_needed(max_frequency(u));
  const auto block_fns = all_blocks(u, bank, blocks);
  const double sd = s.to_double();
  const double qd = q.to_double();
  double sum = 0.0;
  for (int j = 0; j <= blocks; ++j) {
    sum += pow_abs(std::pow(2.0, sd * j) * lp_norm_grid(block_fns[j], p), qd);
  }
  return std::pow(sum, 1.0 / qd);
}

double triebel_norm(const GridFunction& u, const Rational& s, const Rational& p, const Rational& q,
                    const LPFilterBank& bank) {
  if (p < Rational(1) || q < Rational(1)) {
    throw DomainError("Triebel-Lizorkin norm requires 1 <= p, q");
  }
  const int blocks = bank.blocks_needed(max_frequency(u));
  const auto block_fns = all_blocks(u, bank, blocks);
  const double sd = s.to_double();
  const double qd = q.to_double();

  std::vector<std::complex<double>> pointwise(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    double acc = 0.0;
    for (int j = 0; j <= blocks; ++j) {
      acc += pow_abs(std::pow(2.0, sd * j) * std::abs(block_fns[j][i]), qd);
    }
    pointwise[i] = std::pow(acc, 1.0 / qd);
  }
  return lp_norm_grid(GridFunction(u.dim(), u.m(), u.period(), std::move(pointwise)), p);
}

double space_norm(const GridFunction& u, const SpaceSpec& spec, const LPFilterBank& bank) {
  switch (spec.family) {
    case Family::H:
      return bessel_norm(u, spec.s, spec.p);
    case Family::Bpp:
      return besov_norm(u, spec.s, spec.p, spec.p, bank);
    case Family::W:
      if (!spec.s.is_integer()) return besov_norm(u, spec.s, spec.p, spec.p, bank);
      if (spec.s >= Rational(0)) return sobolev_norm(u, spec.s, spec.p);
      throw UsageError("no numeric proxy for W with negative integer smoothness (the B^s_{p,p} "
                       "identification holds for non-integer s only)");
  }
  throw UsageError("unknown family");
}

std::string space_norm_description(const SpaceSpec& spec) {
  switch (spec.family) {
    case Family::H:
      return "Bessel multiplier norm for " + space_str(spec);
    case Family::Bpp:
      return "Littlewood-Paley B^s_{p,p} norm for " + space_str(spec);
    case Family::W:
      if (!spec.s.is_integer()) {
        return "B^s_{p,p} norm for " + space_str(spec) + " (W = B^s_{p,p} for non-integer s)";
      }
      return "classical Sobolev sum norm for " + space_str(spec);
  }
  return "?";
}

} // namespace sobmult
