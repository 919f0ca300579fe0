#include "sobmult/experiments.hpp"

#include "sobmult/errors.hpp"
#include "sobmult/fft.hpp"
#include "sobmult/norms.hpp"
#include "sobmult/random_fields.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace sobmult {

namespace {

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;
constexpr double kExactSlopeTolerance = 0.02;

std::size_t next_pow2(const BigInt& value) {
  std::size_t m = 1;
  while (BigInt(static_cast<unsigned long long>(m)) < value) m <<= 1;
  return m;
}

std::string offsets_str(const CounterexampleConfig& cfg, long long n) {
  std::string out;
  for (long long j = 1; j <= n; ++j) {
    if (!out.empty()) out += ",";
    out += std::to_string(cfg.offset(j));
  }
  return out;
}

void validate_config(const CounterexampleConfig& cfg, const LPFilterBank& bank) {
  if (cfg.epsilon_modes < 1) throw ConfigError("epsilon_modes must be >= 1");
  for (std::size_t i = 1; i < cfg.dyadic_offsets.size(); ++i) {
    if (cfg.dyadic_offsets[i] <= cfg.dyadic_offsets[i - 1]) {
      throw ConfigError("dyadic offsets must be strictly increasing");
    }
  }
  if (!cfg.dyadic_offsets.empty() && cfg.dyadic_offsets.front() < 0) {
    throw ConfigError("dyadic offsets must be nonnegative");
  }
  // Product-safe spectral half-width of a modulated copy: the copies of f^2
  // reach 2 (epsilon_modes - 1) bins past the carrier frequency. Each copy
  // must stay inside the plateau shell of its own block.
  const Rational width(2 * (cfg.epsilon_modes - 1));
  const Rational upper_margin = bank.plateau_exact() - Rational(1);
  const Rational lower_margin = Rational(1) - bank.support_exact() / Rational(2);
  const Rational margin = Rational::min(upper_margin, lower_margin);
  const BigInt first_block = BigInt(1) << cfg.offset(1);
  if (width > margin * Rational(first_block, 1)) {
    throw ConfigError("epsilon_modes = " + std::to_string(cfg.epsilon_modes) +
                      " is too wide for block m_1 = " + std::to_string(cfg.offset(1)) +
                      ": copies would leave the plateau shell");
  }
}

} // namespace

int CounterexampleConfig::offset(long long j) const {
  if (j < 1) throw ConfigError("offset index must be >= 1");
  if (!dyadic_offsets.empty()) {
    if (static_cast<std::size_t>(j) > dyadic_offsets.size()) {
      throw ConfigError("configuration provides only " + std::to_string(dyadic_offsets.size()) +
                        " dyadic offsets, need m_" + std::to_string(j));
    }
    return dyadic_offsets[static_cast<std::size_t>(j - 1)];
  }
  return static_cast<int>(j + 3);
}

GridFunction base_function(const CounterexampleConfig& cfg) {
  if (cfg.base_function) {
    const GridFunction& f = *cfg.base_function;
    if (f.dim() != 1) throw ConfigError("base function must be one-dimensional");
    if (f.m() != cfg.grid_m) throw ConfigError("base function grid does not match grid_m");
    if (std::abs(f.period() - kTwoPi) > 1e-12) {
      throw ConfigError("base function period must be 2*pi so dyadic carriers are grid frequencies");
    }
    return f;
  }
  return GridFunction(1, cfg.grid_m, kTwoPi,
                      std::vector<std::complex<double>>(cfg.grid_m, {1.0, 0.0}));
}

GridFunction build_gN(const CounterexampleConfig& cfg, long long n, const LPFilterBank& bank) {
  if (n < 1) throw ConfigError("g_N needs N >= 1");
  validate_config(cfg, bank);

  const GridFunction f = base_function(cfg);
  const std::size_t m = f.m();
  const long long width = 2 * (cfg.epsilon_modes - 1);
  const int top_offset = cfg.offset(n);
  const BigInt top_frequency = (BigInt(1) << top_offset) + width;
  const BigInt nyquist = BigInt(static_cast<unsigned long long>(m / 2)) - 1;
  if (top_frequency > nyquist) {
    const std::size_t required = next_pow2(2 * (top_frequency + 1));
    throw ConfigError("grid too small for g_N: N = " + std::to_string(n) + " with offset m_N = " +
                      std::to_string(top_offset) + " needs M >= " + std::to_string(required) +
                      ", have M = " + std::to_string(m));
  }

  auto f_bins = dft_forward(f);
  // The base spectrum must be confined to |k| < epsilon_modes.
  double max_mag = 0.0;
  for (const auto& b : f_bins) max_mag = std::max(max_mag, std::abs(b));
  for (std::size_t i = 0; i < f_bins.size(); ++i) {
    if (std::llabs(signed_bin(i, m)) >= cfg.epsilon_modes && std::abs(f_bins[i]) > 1e-12 * max_mag) {
      throw ConfigError("base function spectrum leaks outside |k| < epsilon_modes at bin " +
                        std::to_string(signed_bin(i, m)));
    }
  }

  const double sd = cfg.s.to_double();
  std::vector<std::complex<double>> bins(m, {0.0, 0.0});
  for (long long j = 1; j <= n; ++j) {
    const int mj = cfg.offset(j);
    const long long carrier = 1LL << mj;
    const double amplitude = std::pow(2.0, -sd * static_cast<double>(mj));
    for (long long k = -(cfg.epsilon_modes - 1); k <= cfg.epsilon_modes - 1; ++k) {
      const std::size_t src = static_cast<std::size_t>((k + static_cast<long long>(m)) % static_cast<long long>(m));
      const std::size_t dst = static_cast<std::size_t>((carrier + k) % static_cast<long long>(m));
      bins[dst] += amplitude * f_bins[src];
    }
  }
  return dft_inverse(1, m, f.period(), std::move(bins));
}

ExperimentReport counterexample_growth(const CounterexampleConfig& cfg, const LPFilterBank& bank) {
  if (cfg.s.is_integer()) {
    throw ConfigError("counter-example requires non-integer s, got s = " + cfg.s.str());
  }
  std::set<long long> distinct(cfg.n_values.begin(), cfg.n_values.end());
  if (distinct.size() < 3) {
    throw ConfigError("slope fit needs at least 3 distinct N values, got " +
                      std::to_string(distinct.size()));
  }

  const GridFunction f = base_function(cfg);
  const SpaceSpec factor_space{Family::W, cfg.s2, cfg.p2, {DomainKind::WholeSpace, 1}};
  const double f_norm = space_norm(f, factor_space, bank);

  ExperimentReport report;
  report.experiment = "counterexample_growth";
  report.config = {{"s", cfg.s.str()},
                   {"p1", cfg.p1.str()},
                   {"p2", cfg.p2.str()},
                   {"p", cfg.p.str()},
                   {"s2", cfg.s2.str()},
                   {"grid_m", std::to_string(cfg.grid_m)},
                   {"epsilon_modes", std::to_string(cfg.epsilon_modes)},
                   {"dyadic_offsets", offsets_str(cfg, *std::max_element(cfg.n_values.begin(),
                                                                         cfg.n_values.end()))}};

  std::vector<double> log_n;
  std::vector<double> log_ratio;
  for (long long n : cfg.n_values) {
    const GridFunction g = build_gN(cfg, n, bank);
    const GridFunction gf = pointwise_product(g, f);
    const double g_norm = besov_norm(g, cfg.s, cfg.p1, cfg.p1, bank);
    const double gf_norm = besov_norm(gf, cfg.s, cfg.p, cfg.p, bank);
    const double ratio = gf_norm / (g_norm * f_norm);
    report.rows.push_back({static_cast<double>(n),
                           {{"gN_norm", g_norm}, {"product_norm", gf_norm}, {"ratio", ratio}}});
    log_n.push_back(std::log(static_cast<double>(n)));
    log_ratio.push_back(std::log(ratio));
  }

  auto [slope, stderr_slope] = linear_fit(log_n, log_ratio);
  report.fitted_slope = slope;
  report.slope_stderr = stderr_slope;
  report.expected_slope = cfg.p.inverse() - cfg.p1.inverse();
  report.tolerance = kExactSlopeTolerance;
  report.pass = std::abs(slope - report.expected_slope.to_double()) <= report.tolerance;
  report.provenance = {"g_N: dyadically modulated copies of the base function, one copy per frequency block",
                       "||g_N|| via " + space_norm_description({Family::Bpp, cfg.s, cfg.p1, {DomainKind::WholeSpace, 1}}),
                       "||g_N f|| via " + space_norm_description({Family::Bpp, cfg.s, cfg.p, {DomainKind::WholeSpace, 1}}),
                       "||f|| via " + space_norm_description(factor_space),
                       "torus period 2*pi, grid M = " + std::to_string(cfg.grid_m)};
  return report;
}

namespace {

std::size_t grid_for_bandwidth(const BoundednessOptions& options, long long bandwidth) {
  if (options.grid_m != 0) {
    if (options.grid_m < static_cast<std::size_t>(4 * bandwidth + 4)) {
      throw ConfigError("grid_m = " + std::to_string(options.grid_m) +
                        " cannot resolve products at bandwidth " + std::to_string(bandwidth));
    }
    return options.grid_m;
  }
  std::size_t m = 256;
  while (m < static_cast<std::size_t>(8 * bandwidth)) m <<= 1;
  return m;
}

void check_harness_domain(const SpaceSpec& spec) {
  if (spec.domain.kind != DomainKind::WholeSpace) {
    throw UsageError("the numeric harness models R^n via a periodic torus; bounded-domain "
                     "queries are not verifiable here");
  }
  if (spec.domain.n != 1) {
    throw UsageError("the numeric harness supports n = 1");
  }
}

template <typename RatioFn>
ExperimentReport boundedness_report(const std::string& experiment,
                                    std::vector<std::pair<std::string, std::string>> config,
                                    std::vector<std::string> provenance, long long samples,
                                    std::uint64_t seed, const BoundednessOptions& options,
                                    RatioFn&& ratio_at) {
  if (options.bandwidths.size() < 3) {
    throw ConfigError("boundedness trend needs at least 3 bandwidths");
  }
  if (samples < 1) throw ConfigError("need at least one sample per bandwidth");

  ExperimentReport report;
  report.experiment = experiment;
  report.config = std::move(config);
  report.config.emplace_back("samples", std::to_string(samples));
  report.config.emplace_back("seed", std::to_string(seed));
  report.config.emplace_back("decay", std::to_string(options.decay));

  std::vector<double> log_b;
  std::vector<double> log_max;
  for (long long bandwidth : options.bandwidths) {
    const std::size_t m = grid_for_bandwidth(options, bandwidth);
    double max_ratio = 0.0;
    double sum_ratio = 0.0;
    for (long long sample = 0; sample < samples; ++sample) {
      const double ratio = ratio_at(bandwidth, m, sample);
      max_ratio = std::max(max_ratio, ratio);
      sum_ratio += ratio;
    }
    report.rows.push_back({static_cast<double>(bandwidth),
                           {{"max_ratio", max_ratio},
                            {"mean_ratio", sum_ratio / static_cast<double>(samples)},
                            {"grid_m", static_cast<double>(m)}}});
    log_b.push_back(std::log(static_cast<double>(bandwidth)));
    log_max.push_back(std::log(max_ratio));
  }

  auto [slope, stderr_slope] = linear_fit(log_b, log_max);
  report.fitted_slope = slope;
  report.slope_stderr = stderr_slope;
  report.expected_slope = Rational(0);
  report.tolerance = options.slope_tolerance;
  report.one_sided = true;
  report.pass = slope <= options.slope_tolerance;
  report.provenance = std::move(provenance);
  return report;
}

} // namespace

ExperimentReport empirical_boundedness(const MultQuery& query, long long samples, std::uint64_t seed,
                                       const BoundednessOptions& options, const LPFilterBank& bank) {
  const Verdict verdict = check_multiplication(query);
  if (verdict.status != VerdictStatus::Proved) {
    throw UsageError("refusing to verify unproved claim (verdict: " +
                     std::string(status_name(verdict.status)) + ")");
  }
  check_harness_domain(query.target);

  std::vector<std::pair<std::string, std::string>> config{
      {"left", space_str(query.left)},
      {"right", space_str(query.right)},
      {"target", space_str(query.target)},
      {"rule", std::string(rule_id_name(verdict.certificate->rule))}};
  std::vector<std::string> provenance{"left norm: " + space_norm_description(query.left),
                                      "right norm: " + space_norm_description(query.right),
                                      "target norm: " + space_norm_description(query.target),
                                      "samples: independent complex Gaussian spectra, power-law decay, "
                                      "hard bandwidth cut"};

  return boundedness_report(
      "empirical_boundedness_mult", std::move(config), std::move(provenance), samples, seed, options,
      [&](long long bandwidth, std::size_t m, long long sample) {
        const auto b = static_cast<std::uint64_t>(bandwidth);
        const auto i = static_cast<std::uint64_t>(sample);
        const GridFunction u =
            random_band_limited(m, kTwoPi, bandwidth, options.decay, mix_seed(seed, b, i, 0));
        const GridFunction v =
            random_band_limited(m, kTwoPi, bandwidth, options.decay, mix_seed(seed, b, i, 1));
        const double denom = space_norm(u, query.left, bank) * space_norm(v, query.right, bank);
        return space_norm(pointwise_product(u, v), query.target, bank) / denom;
      });
}

ExperimentReport empirical_boundedness(const EmbedQuery& query, long long samples, std::uint64_t seed,
                                       const BoundednessOptions& options, const LPFilterBank& bank) {
  const Verdict verdict = check_embedding(query);
  if (verdict.status != VerdictStatus::Proved) {
    throw UsageError("refusing to verify unproved claim (verdict: " +
                     std::string(status_name(verdict.status)) + ")");
  }
  check_harness_domain(query.target);

  std::vector<std::pair<std::string, std::string>> config{
      {"source", space_str(query.source)},
      {"target", space_str(query.target)},
      {"rule", std::string(rule_id_name(verdict.certificate->rule))}};
  std::vector<std::string> provenance{"source norm: " + space_norm_description(query.source),
                                      "target norm: " + space_norm_description(query.target),
                                      "samples: independent complex Gaussian spectra, power-law decay, "
                                      "hard bandwidth cut"};

  return boundedness_report(
      "empirical_boundedness_embed", std::move(config), std::move(provenance), samples, seed, options,
      [&](long long bandwidth, std::size_t m, long long sample) {
        const auto b = static_cast<std::uint64_t>(bandwidth);
        const auto i = static_cast<std::uint64_t>(sample);
        const GridFunction u =
            random_band_limited(m, kTwoPi, bandwidth, options.decay, mix_seed(seed, b, i, 0));
        return space_norm(u, query.target, bank) / space_norm(u, query.source, bank);
      });
}

} // namespace sobmult
