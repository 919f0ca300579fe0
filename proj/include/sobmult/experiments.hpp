#pragma once

#include "sobmult/filter_bank.hpp"
#include "sobmult/grid.hpp"
#include "sobmult/rational.hpp"
#include "sobmult/report.hpp"
#include "sobmult/rule_engine.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace sobmult {

/**
 * Configuration of the counter-example experiment. g_N is the sum of N
 * dyadically modulated copies of a band-limited base function f,
 *
 *   g_N(x) = sum_{j=1..N} 2^{-s m_j} e^{i 2^{m_j} x} f(x),
 *
 * with the spectrum of f confined to bins |k| < epsilon_modes. Copy j then
 * occupies the plateau shell of frequency block m_j alone, which makes the
 * Littlewood-Paley sums collapse exactly.
 */
struct CounterexampleConfig {
  Rational s = Rational(1, 2); // target smoothness, > 0 and not an integer
  Rational p1 = Rational(4);
  Rational p2 = Rational(2);
  Rational p = Rational(2);
  Rational s2 = Rational(1, 2); // smoothness of the constant ||f|| factor
  std::vector<long long> n_values = {1, 2, 4, 8};
  std::size_t grid_m = 16384;
  long long epsilon_modes = 1;             // f == const has the single bin k = 0
  std::vector<int> dyadic_offsets;         // m_1 < m_2 < ...; empty means m_j = j + 3
  std::optional<GridFunction> base_function; // default: constant 1 on [0, 2pi)

  int offset(long long j) const; // 1-based m_j
};

/// The base function f of a configuration (period 2*pi, cfg.grid_m samples).
GridFunction base_function(const CounterexampleConfig& cfg);

/// Builds g_N on the configured grid. Throws ConfigError when the grid
/// cannot hold frequency 2^{m_N} plus the (product-safe) spectral width of
/// the copies, naming the required grid size.
GridFunction build_gN(const CounterexampleConfig& cfg, long long n, const LPFilterBank& bank = {});

/// Measures R(N) = ||g_N f||_{s,p} / (||g_N||_{s,p1} ||f||_{s2,p2}) with the
/// diagonal Littlewood-Paley norms and fits the log-log slope, expected
/// 1/p - 1/p1. Requires non-integer s and at least three N values.
ExperimentReport counterexample_growth(const CounterexampleConfig& cfg, const LPFilterBank& bank = {});

struct BoundednessOptions {
  std::vector<long long> bandwidths = {16, 32, 64, 128};
  double decay = 1.0;               // spectral decay exponent of the samples
  std::size_t grid_m = 0;           // 0: choose per bandwidth
  double slope_tolerance = 0.05;
};

/// Draws random band-limited pairs across a bandwidth ladder and records the
/// ratio ||uv||_target / (||u||_left ||v||_right). Passes when the fitted
/// log-log slope of the per-bandwidth maximum ratio stays below the
/// tolerance. Refuses (UsageError) unless the query is Proved.
ExperimentReport empirical_boundedness(const MultQuery& query, long long samples, std::uint64_t seed,
                                       const BoundednessOptions& options = {},
                                       const LPFilterBank& bank = {});

/// Same harness for a proved embedding: ratio ||u||_target / ||u||_source.
ExperimentReport empirical_boundedness(const EmbedQuery& query, long long samples, std::uint64_t seed,
                                       const BoundednessOptions& options = {},
                                       const LPFilterBank& bank = {});

} // namespace sobmult
