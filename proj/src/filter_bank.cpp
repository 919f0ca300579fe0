#include "sobmult/filter_bank.hpp"

#include "sobmult/errors.hpp"
#include "sobmult/fft.hpp"

#include <cmath>

namespace sobmult {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

LPFilterBank::LPFilterBank(const Rational& plateau, const Rational& support)
    : plateau_(plateau.to_double()), support_(support.to_double()), plateau_exact_(plateau),
      support_exact_(support) {
  if (!(Rational(1) <= plateau && plateau < support && plateau > support / Rational(2))) {
    // plateau > support/2 keeps phi identically 1 on [support/2, plateau].
    throw ValidationError("filter bank needs 1 <= plateau < support < 2*plateau");
  }
}

double LPFilterBank::phi0(double r) const {
  if (r <= plateau_) return 1.0;
  if (r >= support_) return 0.0;
  const double t = (r - plateau_) / (support_ - plateau_);
  const double c = std::cos(0.5 * kPi * t);
  return c * c;
}

double LPFilterBank::block_weight(int j, double xi_magnitude) const {
  if (j == 0) return phi0(xi_magnitude);
  const double scaled = std::ldexp(xi_magnitude, -j); // 2^{-j} |xi|
  return phi0(scaled) - phi0(2.0 * scaled);
}

int LPFilterBank::blocks_needed(double xi_max) const {
  int j = 0;
  while (std::ldexp(plateau_, j) < xi_max) ++j;
  return j;
}

std::pair<double, double> LPFilterBank::plateau_shell(int j) const {
  if (j == 0) return {0.0, plateau_};
  return {std::ldexp(support_ / 2.0, j), std::ldexp(plateau_, j)};
}

GridFunction lp_block(const GridFunction& u, int j, const LPFilterBank& bank) {
  if (j < 0) throw DomainError("block index must be nonnegative");
  auto bins = dft_forward(u);
  for (std::size_t i = 0; i < bins.size(); ++i) {
    bins[i] *= bank.block_weight(j, frequency_magnitude(i, u.dim(), u.m(), u.period()));
  }
  return dft_inverse(u.dim(), u.m(), u.period(), std::move(bins));
}

} // namespace sobmult
