#pragma once

#include "sobmult/rule_engine.hpp"
#include "sobmult/space.hpp"

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sobmult {

enum class InterpMethod { Real, Complex };

/**
 * Interpolation metadata attached to a derived space. Admissibility is
 * advisory: the parameter arithmetic is always returned, and caveats name
 * any case assumption that fails (the blocked integer patterns are usually
 * repaired by an epsilon shift, see suggest_epsilon_shift()).
 */
struct InterpParams {
  Rational theta;
  InterpMethod method = InterpMethod::Real;
  std::optional<Rational> secondary; // secondary exponent of the real functor
  bool admissible = false;
  std::vector<std::string> caveats;
};

/// s = (1-theta) s0 + theta s1, 1/p = (1-theta)/p0 + theta/p1, exactly.
/// Requires matching family and domain and 0 < theta < 1 (DomainError).
std::pair<SpaceSpec, InterpParams> interpolate_specs(const SpaceSpec& a, const SpaceSpec& b,
                                                     const Rational& theta);

struct BilinearDerivation {
  MultQuery query;
  Certificate certificate;
};

/// Derives the theta-interpolated multiplication statement from two proved
/// endpoint statements. For the real method the secondary exponents
/// (p, q, r) must satisfy 1/r = 1/p + 1/q - 1 >= 0 exactly; passing no
/// secondary exponents selects the complex method. The returned certificate
/// embeds both endpoint certificates.
BilinearDerivation interpolate_bilinear(const MultQuery& end0, const Verdict& verdict0,
                                        const MultQuery& end1, const Verdict& verdict1,
                                        const Rational& theta,
                                        std::optional<std::array<Rational, 3>> real_secondary = std::nullopt);

struct EpsilonShift {
  Rational epsilon;
  SpaceSpec shifted;                       // smoothness lowered by epsilon
  std::vector<std::string> active_terms;   // which minimum terms were binding
};

/// Mirrors the proof device for blocked integer cases: epsilon is half the
/// minimum of the given positive slack terms (plus the unit step that keeps
/// the shifted smoothness non-integer). All terms must be positive.
EpsilonShift suggest_epsilon_shift(const SpaceSpec& spec,
                                   std::span<const std::pair<std::string, Rational>> slack_terms);

} // namespace sobmult
