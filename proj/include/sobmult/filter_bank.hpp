#pragma once

#include "sobmult/grid.hpp"
#include "sobmult/rational.hpp"

namespace sobmult {

/**
 * Dyadic frequency partition of unity.
 *
 * The radial base profile phi0 equals 1 for |xi| <= plateau, 0 for
 * |xi| >= support, with a squared-cosine transition between. The annular
 * profile is phi(xi) = phi0(xi) - phi0(2 xi) and block j >= 1 uses
 * phi_j(xi) = phi(2^{-j} xi); block 0 is phi0 itself. By telescoping,
 * sum_{j=0}^{J} phi_j(xi) = phi0(2^{-J} xi), which is exactly 1 once
 * 2^{-J} |xi| <= plateau, so the partition of unity holds identically on
 * any finite spectrum.
 *
 * With plateau > 1 each annulus phi_j is identically 1 on the shell
 * [support/2, plateau] * 2^j of positive width, which gives the exact
 * single-block identities used by the experiments.
 */
class LPFilterBank {
public:
  LPFilterBank() : LPFilterBank(Rational(11, 10), Rational(19, 10)) {}
  LPFilterBank(const Rational& plateau, const Rational& support);

  double plateau() const { return plateau_; }
  double support() const { return support_; }
  const Rational& plateau_exact() const { return plateau_exact_; }
  const Rational& support_exact() const { return support_exact_; }

  /// Radial base profile phi0(r).
  double phi0(double r) const;
  /// phi_j(|xi|) for block j >= 0.
  double block_weight(int j, double xi_magnitude) const;

  /// Smallest J such that blocks 0..J form a partition of unity up to
  /// frequency magnitude xi_max.
  int blocks_needed(double xi_max) const;

  /// Plateau shell [lo, hi] of block j (where phi_j is identically 1).
  std::pair<double, double> plateau_shell(int j) const;

private:
  double plateau_;
  double support_;
  Rational plateau_exact_;
  Rational support_exact_;
};

/// Frequency-masked copy F^{-1}(phi_j F u).
GridFunction lp_block(const GridFunction& u, int j, const LPFilterBank& bank);

} // namespace sobmult
