#pragma once

#include "sobmult/filter_bank.hpp"
#include "sobmult/grid.hpp"
#include "sobmult/rational.hpp"
#include "sobmult/space.hpp"

#include <string>

namespace sobmult {

/// Riemann-sum L^p norm: (sum |u_i|^p (L/M)^dim)^{1/p}, p >= 1.
double lp_norm_grid(const GridFunction& u, const Rational& p);

/// Bessel potential norm || F^{-1}(<xi>^s F u) ||_{L^p} with
/// <xi> = (1 + |xi|^2)^{1/2}; 1 < p < inf, any rational s.
double bessel_norm(const GridFunction& u, const Rational& s, const Rational& p);

/// Gagliardo double sum over ordered grid pairs with the periodic distance
/// min(|x-y|, L-|x-y|); coincident points are skipped exactly. Dimension 1
/// only; 0 < theta < 1, p >= 1. The O(M^2) kernel runs offset-major in
/// fixed-size tiles so the summation order is deterministic.
double slobodeckij_seminorm(const GridFunction& u, const Rational& theta, const Rational& p);

/// Classical Sobolev norm, sum convention: sum_{|nu| <= k} ||d^nu u||_p
/// plus, for fractional s = k + theta, sum_{|nu| = k} |d^nu u|_{theta,p}.
/// s >= 0; dimension 1 required when s is not an integer.
double sobolev_norm(const GridFunction& u, const Rational& s, const Rational& p);

/// Spectral derivative d^{(ox,oy)} u via the multiplier (i xi_1)^{ox} (i xi_2)^{oy}.
GridFunction spectral_derivative(const GridFunction& u, int order_x, int order_y = 0);

/// Besov norm (sum_j 2^{sjq} ||F^{-1}(phi_j F u)||_p^q)^{1/q}; j ranges over
/// the finitely many blocks meeting the discrete spectrum.
double besov_norm(const GridFunction& u, const Rational& s, const Rational& p, const Rational& q,
                  const LPFilterBank& bank);

/// Triebel-Lizorkin norm: pointwise l^q over blocks, then L^p. Coincides
/// with besov_norm when p = q.
double triebel_norm(const GridFunction& u, const Rational& s, const Rational& p, const Rational& q,
                    const LPFilterBank& bank);

/// Numeric norm matching a space specification: W integer via sobolev_norm,
/// W non-integer (any sign) via besov_norm(s,p,p), H via bessel_norm, Bpp
/// via besov_norm. Throws UsageError where no proxy is justified (negative
/// integer W smoothness).
double space_norm(const GridFunction& u, const SpaceSpec& spec, const LPFilterBank& bank);

/// Human-readable description of the norm space_norm would use.
std::string space_norm_description(const SpaceSpec& spec);

} // namespace sobmult
