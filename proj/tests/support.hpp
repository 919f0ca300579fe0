#pragma once

#include "sobmult/rule_engine.hpp"

#include <cstdint>
#include <random>

namespace sobmult::testsupport {

/// Deterministic generator of valid randomized queries: rational exponents
/// with bounded denominators, n in {1,2,3}, both domain kinds, all families.
class QueryGen {
public:
  explicit QueryGen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  Rational rational(long long lo, long long hi, long long max_den) {
    std::uniform_int_distribution<long long> den_dist(1, max_den);
    const long long den = den_dist(rng_);
    std::uniform_int_distribution<long long> num_dist(lo * den, hi * den);
    return Rational(num_dist(rng_), den);
  }

  /// Integrability exponent valid for the given family and smoothness:
  /// p in (1, 8] where the open range is required, otherwise [1, 8].
  Rational integrability(Family family, const Rational& s, long long max_den = 12) {
    std::uniform_int_distribution<long long> den_dist(1, max_den);
    const long long den = den_dist(rng_);
    const bool open = family == Family::H || s < Rational(0);
    std::uniform_int_distribution<long long> num_dist(open ? den + 1 : den, 8 * den);
    return Rational(num_dist(rng_), den);
  }

  DomainSpec domain() {
    std::uniform_int_distribution<int> kind_dist(0, 1);
    std::uniform_int_distribution<int> n_dist(1, 3);
    return {kind_dist(rng_) == 0 ? DomainKind::WholeSpace : DomainKind::BoundedLipschitz,
            n_dist(rng_)};
  }

  Family family() {
    std::uniform_int_distribution<int> dist(0, 2);
    return static_cast<Family>(dist(rng_));
  }

  SpaceSpec space(Family fam, const DomainSpec& dom, long long max_den = 12) {
    const Rational s = rational(-3, 4, max_den);
    return SpaceSpec{fam, s, integrability(fam, s, max_den), dom};
  }

  /// Queries mix independent draws with coupled ones (shared smoothness or
  /// integrability between a factor and the target) so that boundary
  /// equalities and the necessity hypotheses actually occur in the corpus.
  MultQuery mult_query(long long max_den = 12) {
    const Family fam = family();
    const DomainSpec dom = domain();
    MultQuery q{space(fam, dom, max_den), space(fam, dom, max_den), space(fam, dom, max_den)};
    std::uniform_int_distribution<int> coin(0, 2);
    if (coin(rng_) == 0) {
      SpaceSpec& side = coin(rng_) == 0 ? q.left : q.right;
      side.s = q.target.s;
      if (side.s < Rational(0) && side.p <= Rational(1)) {
        side.p = integrability(fam, side.s, max_den);
      }
    }
    if (coin(rng_) == 0) {
      SpaceSpec& side = coin(rng_) == 0 ? q.left : q.right;
      if (side.s >= Rational(0) || q.target.p > Rational(1)) {
        side.p = q.target.p;
      }
    }
    return q;
  }

  EmbedQuery embed_query(long long max_den = 12) {
    const Family fam = family();
    const DomainSpec dom = domain();
    return EmbedQuery{space(fam, dom, max_den), space(fam, dom, max_den)};
  }

private:
  std::mt19937_64 rng_;
};

} // namespace sobmult::testsupport
