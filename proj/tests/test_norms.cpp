#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sobmult/errors.hpp"
#include "sobmult/fft.hpp"
#include "sobmult/norms.hpp"
#include "sobmult/random_fields.hpp"

#include <cmath>
#include <complex>
#include <vector>

using namespace sobmult;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

GridFunction from_samples(std::size_t m, auto&& f) {
  std::vector<std::complex<double>> s(m);
  for (std::size_t i = 0; i < m; ++i) s[i] = f(kTwoPi * static_cast<double>(i) / static_cast<double>(m));
  return GridFunction(1, m, kTwoPi, std::move(s));
}

GridFunction cosine(std::size_t m) {
  return from_samples(m, [](double x) { return std::complex<double>{std::cos(x), 0.0}; });
}

GridFunction single_mode(std::size_t m, long long k) {
  return from_samples(m, [&](double x) { return std::polar(1.0, static_cast<double>(k) * x); });
}

double rel_err(double measured, double expected) {
  return std::abs(measured - expected) / std::abs(expected);
}

} // namespace

TEST_CASE("Lebesgue norm closed forms") {
  const GridFunction ones = from_samples(256, [](double) { return std::complex<double>{1.0, 0.0}; });
  for (const auto& p : {Rational(1), Rational(2), Rational(7, 2)}) {
    CHECK(rel_err(lp_norm_grid(ones, p), std::pow(kTwoPi, 1.0 / p.to_double())) < 1e-14);
  }
  CHECK(rel_err(lp_norm_grid(cosine(256), Rational(2)), std::sqrt(kPi)) < 1e-14);
  // int cos^4 over a period is 3 pi / 4
  CHECK(rel_err(lp_norm_grid(cosine(256), Rational(4)), std::pow(0.75 * kPi, 0.25)) < 1e-14);
  CHECK_THROWS_AS(lp_norm_grid(ones, Rational(1, 2)), DomainError);
}

TEST_CASE("Bessel norm: zero order reduces to the Lebesgue norm") {
  const GridFunction u = random_band_limited(256, kTwoPi, 60, 1.0, 5);
  for (const auto& p : {Rational(2), Rational(3), Rational(3, 2)}) {
    CHECK(rel_err(bessel_norm(u, Rational(0), p), lp_norm_grid(u, p)) < 1e-12);
  }
}

TEST_CASE("Bessel norm single-mode closed forms") {
  CHECK(rel_err(bessel_norm(cosine(256), Rational(1), Rational(2)), std::sqrt(2.0 * kPi)) < 1e-10);
  CHECK(rel_err(bessel_norm(single_mode(256, 4), Rational(-2), Rational(2)),
                std::sqrt(kTwoPi) / 17.0) < 1e-10);
  CHECK_THROWS_AS(bessel_norm(cosine(64), Rational(1), Rational(1)), DomainError);
}

TEST_CASE("Bessel norm matches a directly summed Parseval oracle") {
  // synthesize a few modes by direct evaluation, no transforms involved
  const std::size_t m = 128;
  const std::vector<std::pair<long long, std::complex<double>>> modes{
      {0, {0.7, 0.0}}, {1, {0.2, -0.4}}, {-3, {0.0, 1.1}}, {7, {-0.5, 0.3}}, {-16, {0.05, 0.0}}};
  const GridFunction u = from_samples(m, [&](double x) {
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [k, c] : modes) acc += c * std::polar(1.0, static_cast<double>(k) * x);
    return acc;
  });
  for (const auto& s : {Rational(0), Rational(1, 2), Rational(2), Rational(-1)}) {
    double oracle_sq = 0.0;
    for (const auto& [k, c] : modes) {
      const double xi2 = static_cast<double>(k) * static_cast<double>(k);
      oracle_sq += std::pow(1.0 + xi2, s.to_double()) * std::norm(c);
    }
    oracle_sq *= kTwoPi; // quadrature of |sum c_k e^{ikx}|^2 over [0, 2pi)
    CHECK(rel_err(bessel_norm(u, s, Rational(2)), std::sqrt(oracle_sq)) < 1e-10);
  }
}

TEST_CASE("Gagliardo seminorm basics") {
  const GridFunction ones = from_samples(128, [](double) { return std::complex<double>{3.5, -1.0}; });
  CHECK(slobodeckij_seminorm(ones, Rational(1, 2), Rational(2)) == 0.0);

  const GridFunction u = random_band_limited(128, kTwoPi, 20, 1.0, 9);
  const double one = slobodeckij_seminorm(u, Rational(1, 3), Rational(5, 2));
  const double two = slobodeckij_seminorm(scaled(u, {2.0, 0.0}), Rational(1, 3), Rational(5, 2));
  CHECK(rel_err(two, 2.0 * one) < 1e-12);

  CHECK_THROWS_AS(slobodeckij_seminorm(u, Rational(0), Rational(2)), DomainError);
  CHECK_THROWS_AS(slobodeckij_seminorm(u, Rational(1), Rational(2)), DomainError);
  CHECK_THROWS_AS(slobodeckij_seminorm(GridFunction::zeros(2, 16, 1.0), Rational(1, 2), Rational(2)),
                  UsageError);
}

TEST_CASE("Gagliardo seminorm converges under grid refinement") {
  // regression values for cos(x), theta = 1/2, p = 2
  const double v256 = slobodeckij_seminorm(cosine(256), Rational(1, 2), Rational(2));
  const double v512 = slobodeckij_seminorm(cosine(512), Rational(1, 2), Rational(2));
  const double v1024 = slobodeckij_seminorm(cosine(1024), Rational(1, 2), Rational(2));
  CHECK(rel_err(v256, 3.898068712177) < 1e-9);
  CHECK(rel_err(v512, 3.903018557785) < 1e-9);
  CHECK(rel_err(v1024, 3.905489174523) < 1e-9);
  // Cauchy: increments shrink with refinement
  CHECK(std::abs(v512 - v256) > std::abs(v1024 - v512));
  // Richardson-extrapolated reference (first order in h)
  CHECK(std::abs(v1024 - 3.907956838) < 3.0e-3);
}

TEST_CASE("spectral derivatives") {
  const GridFunction u = cosine(128);
  const GridFunction du = spectral_derivative(u, 1);
  for (std::size_t i = 0; i < du.size(); ++i) {
    const double x = kTwoPi * static_cast<double>(i) / 128.0;
    CHECK(std::abs(du[i] - std::complex<double>{-std::sin(x), 0.0}) < 1e-12);
  }
  const GridFunction mode = single_mode(128, 4);
  const GridFunction dmode = spectral_derivative(mode, 2);
  for (std::size_t i = 0; i < dmode.size(); ++i) {
    CHECK(std::abs(dmode[i] - (-16.0) * mode[i]) < 1e-10);
  }
}

TEST_CASE("classical Sobolev norm") {
  const GridFunction u = cosine(256);
  CHECK(sobolev_norm(u, Rational(0), Rational(2)) == lp_norm_grid(u, Rational(2)));
  CHECK(rel_err(sobolev_norm(u, Rational(1), Rational(2)), 2.0 * std::sqrt(kPi)) < 1e-12);

  // definitional decomposition at s = 3/2
  const double direct = sobolev_norm(u, Rational(3, 2), Rational(2));
  const double split = sobolev_norm(u, Rational(1), Rational(2)) +
                       slobodeckij_seminorm(spectral_derivative(u, 1), Rational(1, 2), Rational(2));
  CHECK(direct == doctest::Approx(split).epsilon(1e-14));

  CHECK_THROWS_AS(sobolev_norm(u, Rational(-1), Rational(2)), DomainError);
  CHECK_THROWS_AS(sobolev_norm(GridFunction::zeros(2, 16, 1.0), Rational(1, 2), Rational(2)),
                  UsageError);
}

TEST_CASE("classical Sobolev norm in two dimensions") {
  const std::size_t m = 32;
  std::vector<std::complex<double>> s(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double x = kTwoPi * static_cast<double>(i) / m;
      const double y = kTwoPi * static_cast<double>(j) / m;
      s[i * m + j] = std::polar(1.0, x + 2.0 * y);
    }
  }
  const GridFunction u(2, m, kTwoPi, std::move(s));
  // |d^nu u| = |xi1|^{nu1} |xi2|^{nu2} with xi = (1, 2); the norm sums
  // 1, 1, 2, 1, 2, 4 times ||u||_2 = 2 pi over the multi-indices |nu| <= 2
  CHECK(rel_err(sobolev_norm(u, Rational(2), Rational(2)), 11.0 * kTwoPi) < 1e-10);
}

TEST_CASE("filter bank partition of unity and shells") {
  const LPFilterBank bank;
  CHECK(bank.phi0(0.0) == 1.0);
  CHECK(bank.phi0(1.1) == 1.0);
  CHECK(bank.phi0(1.9) == 0.0);
  for (double xi : {0.3, 0.9999, 1.0, 3.7, 16.0, 500.0, 8000.0}) {
    const int blocks = bank.blocks_needed(xi);
    double sum = 0.0;
    for (int j = 0; j <= blocks; ++j) sum += bank.block_weight(j, xi);
    CHECK(std::abs(sum - 1.0) < 1e-12);
  }
  const auto [lo, hi] = bank.plateau_shell(4);
  CHECK(lo == doctest::Approx(15.2));
  CHECK(hi == doctest::Approx(17.6));
  CHECK(bank.block_weight(4, 16.0) == 1.0);
  CHECK(bank.block_weight(3, 16.0) == 0.0);
  CHECK(bank.block_weight(5, 16.0) == 0.0);
  CHECK_THROWS_AS(LPFilterBank(Rational(1), Rational(5, 2)), ValidationError);
}

TEST_CASE("frequency blocks") {
  const LPFilterBank bank;
  const GridFunction mode = single_mode(256, 16);
  const GridFunction same = lp_block(mode, 4, bank);
  const GridFunction zero = lp_block(mode, 2, bank);
  for (std::size_t i = 0; i < mode.size(); ++i) {
    CHECK(std::abs(same[i] - mode[i]) < 1e-12);
    CHECK(std::abs(zero[i]) < 1e-12);
  }

  const GridFunction u = random_band_limited(256, kTwoPi, 100, 0.7, 21);
  const int blocks = bank.blocks_needed(100.0);
  GridFunction acc = GridFunction::zeros(1, 256, kTwoPi);
  for (int j = 0; j <= blocks; ++j) acc = pointwise_sum(acc, lp_block(u, j, bank));
  for (std::size_t i = 0; i < u.size(); ++i) {
    CHECK(std::abs(acc[i] - u[i]) < 1e-12);
  }
}

TEST_CASE("Besov norm identities") {
  const LPFilterBank bank;
  const GridFunction mode = single_mode(512, 16); // plateau of block 4
  for (const auto& s : {Rational(1, 2), Rational(-1, 2)}) {
    for (const auto& q : {Rational(2), Rational(3)}) {
      const double expected = std::pow(2.0, 4.0 * s.to_double()) * std::sqrt(kTwoPi);
      CHECK(rel_err(besov_norm(mode, s, Rational(2), q, bank), expected) < 1e-12);
    }
  }
  CHECK(rel_err(besov_norm(mode, Rational(0), Rational(2), Rational(5), bank), std::sqrt(kTwoPi)) <
        1e-12);

  const GridFunction u = random_band_limited(256, kTwoPi, 50, 1.0, 31);
  const double one = besov_norm(u, Rational(1, 2), Rational(2), Rational(2), bank);
  const double two = besov_norm(scaled(u, {2.0, 0.0}), Rational(1, 2), Rational(2), Rational(2), bank);
  CHECK(rel_err(two, 2.0 * one) < 1e-12);
}

TEST_CASE("Triebel-Lizorkin norm coincides with Besov on the diagonal") {
  const LPFilterBank bank;
  const GridFunction u = random_band_limited(256, kTwoPi, 40, 1.2, 77);
  for (const auto& pq : {Rational(2), Rational(3), Rational(5, 2)}) {
    const double b = besov_norm(u, Rational(1, 2), pq, pq, bank);
    const double f = triebel_norm(u, Rational(1, 2), pq, pq, bank);
    CHECK(std::abs(f - b) / b < 1e-10);
  }
  const GridFunction mode = single_mode(256, 16);
  CHECK(rel_err(triebel_norm(mode, Rational(1, 2), Rational(2), Rational(4), bank),
                4.0 * std::sqrt(kTwoPi)) < 1e-10); // 2^{4s} with s = 1/2
  CHECK(triebel_norm(GridFunction::zeros(1, 64, kTwoPi), Rational(1), Rational(2), Rational(2),
                     bank) == 0.0);
}

TEST_CASE("norms are absolutely homogeneous and subadditive") {
  const LPFilterBank bank;
  const GridFunction u = random_band_limited(128, kTwoPi, 20, 1.0, 51);
  const GridFunction v = random_band_limited(128, kTwoPi, 20, 1.0, 52);
  const std::complex<double> lambda{1.0, 1.0}; // |lambda| = sqrt(2)
  const double mag = std::abs(lambda);

  const auto homogeneous = [&](auto&& norm) {
    const double base = norm(u);
    CHECK(rel_err(norm(scaled(u, lambda)), mag * base) < 1e-12);
    const double sum = norm(pointwise_sum(u, v));
    CHECK(sum <= norm(u) + norm(v) + 1e-9 * sum);
  };
  homogeneous([&](const GridFunction& w) { return lp_norm_grid(w, Rational(3)); });
  homogeneous([&](const GridFunction& w) { return bessel_norm(w, Rational(1, 2), Rational(2)); });
  homogeneous(
      [&](const GridFunction& w) { return slobodeckij_seminorm(w, Rational(1, 2), Rational(2)); });
  homogeneous([&](const GridFunction& w) { return sobolev_norm(w, Rational(3, 2), Rational(2)); });
  homogeneous(
      [&](const GridFunction& w) { return besov_norm(w, Rational(1, 2), Rational(2), Rational(3), bank); });
  homogeneous(
      [&](const GridFunction& w) { return triebel_norm(w, Rational(1, 2), Rational(2), Rational(3), bank); });
}

TEST_CASE("Sobolev and Besov norms are equivalent within the recorded band") {
  // regression band for s = 1/2, p = 2, bandwidth 32, decay 1.0
  const LPFilterBank bank;
  for (int k = 0; k < 100; ++k) {
    const GridFunction u = random_band_limited(256, kTwoPi, 32, 1.0, mix_seed(777, k));
    const double ratio = sobolev_norm(u, Rational(1, 2), Rational(2)) /
                         besov_norm(u, Rational(1, 2), Rational(2), Rational(2), bank);
    CHECK(ratio > 2.2);
    CHECK(ratio < 4.0);
  }
}

TEST_CASE("space norm dispatch") {
  const LPFilterBank bank;
  const DomainSpec r1{DomainKind::WholeSpace, 1};
  const GridFunction u = random_band_limited(128, kTwoPi, 16, 1.0, 61);

  CHECK(space_norm(u, {Family::W, Rational(1), Rational(2), r1}, bank) ==
        sobolev_norm(u, Rational(1), Rational(2)));
  CHECK(space_norm(u, {Family::W, Rational(1, 2), Rational(2), r1}, bank) ==
        besov_norm(u, Rational(1, 2), Rational(2), Rational(2), bank));
  CHECK(space_norm(u, {Family::W, Rational(-1, 2), Rational(2), r1}, bank) ==
        besov_norm(u, Rational(-1, 2), Rational(2), Rational(2), bank));
  CHECK(space_norm(u, {Family::H, Rational(2), Rational(2), r1}, bank) ==
        bessel_norm(u, Rational(2), Rational(2)));
  CHECK(space_norm(u, {Family::Bpp, Rational(1, 2), Rational(3), r1}, bank) ==
        besov_norm(u, Rational(1, 2), Rational(3), Rational(3), bank));
  CHECK_THROWS_AS(space_norm(u, {Family::W, Rational(-1), Rational(2), r1}, bank), UsageError);
}
