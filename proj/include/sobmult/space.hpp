#pragma once

#include "sobmult/rational.hpp"

#include <optional>
#include <string>

namespace sobmult {

/// Underlying domain: all of R^n, or a bounded subset with Lipschitz boundary.
enum class DomainKind { WholeSpace, BoundedLipschitz };

struct DomainSpec {
  DomainKind kind = DomainKind::WholeSpace;
  int n = 1; ///< spatial dimension, >= 1

  friend bool operator==(const DomainSpec&, const DomainSpec&) = default;
};

/// Space family: Sobolev-Slobodeckij W^{s,p}, Bessel potential H^{s,p},
/// or the diagonal Besov scale B^s_{p,p}.
enum class Family { W, H, Bpp };

std::string_view family_name(Family f);
Family family_from_name(std::string_view name); // throws ParseError

/// A fully identified function space (family, smoothness, integrability, domain).
struct SpaceSpec {
  Family family = Family::W;
  Rational s;
  Rational p = Rational(2);
  DomainSpec domain;

  bool integer_smoothness() const { return s.is_integer(); }

  friend bool operator==(const SpaceSpec&, const SpaceSpec&) = default;
};

std::string space_str(const SpaceSpec& spec);

/// Validates the exponent ranges for (family, s) and returns the canonical
/// spec. Throws ValidationError naming the violated bound. Idempotent.
///
/// Admissible ranges: 1 <= p for W with s >= 0 and for Bpp with s >= 0;
/// 1 < p whenever s < 0 or the family is H. Individual rules re-validate
/// their own, possibly stricter, bounds.
SpaceSpec validate_space(const SpaceSpec& spec);

/// For s < 0 the space is realized as a dual; these are the parameters
/// (-s, p') of the predual. Empty for s >= 0.
std::optional<std::pair<Rational, Rational>> predual_parameters(const SpaceSpec& spec);

} // namespace sobmult
